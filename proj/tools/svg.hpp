#pragma once

#include <string>
#include <vector>

namespace cli {

struct Series {
    std::vector<double> x, y;
};

// minimal line plot: white background, two axes with 5 tick labels each,
// one polyline per series
void write_svg(const std::string& path, const std::vector<Series>& series,
               const std::string& xlabel, const std::string& ylabel);

}  // namespace cli
