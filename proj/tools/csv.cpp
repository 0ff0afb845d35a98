#include "csv.hpp"

#include <cstdio>

namespace cli {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_complex(double re, double im) {
    if (im == 0) return fmt(re);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", re, im);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path) {
    if (!path.empty() && path != "-") {
        file_.open(path);
        if (!file_) throw cli_error{EXIT_VALIDATION, "cannot open output file: " + path};
    }
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    std::ostream& o = file_.is_open() ? file_ : std::cout;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) o << ',';
        o << cells[i];
    }
    o << '\n';
}

}  // namespace cli
