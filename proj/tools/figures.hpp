#pragma once

#include <string>

namespace cli {

int solver_size_for(int n_max);

// Figure drivers; each writes <id>.csv and <id>.svg into dir.
void figure_f500(const std::string& dir);
void figure_bulk(const std::string& dir);  // also writes bulk.json with the global max
void figure_l2norms(const std::string& dir, int n_max);

// shared by the histogram subcommand (no SVG) and the figure driver
void emit_histogram(const std::string& csv_path, const std::string& svg_path,
                    double x0, int n_max, int bins);

}  // namespace cli
