#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace cli {

constexpr int EXIT_VALIDATION = 2;
constexpr int EXIT_TOLERANCE = 3;

struct cli_error {
    int code;
    std::string msg;
};

// 17 significant digits: enough to round-trip a double exactly
std::string fmt(double v);
std::string fmt_complex(double re, double im);

// path "-" or empty writes to stdout
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    void row(const std::vector<std::string>& cells);

private:
    std::ofstream file_;
};

}  // namespace cli
