#include "svg.hpp"

#include "csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace cli {

void write_svg(const std::string& path, const std::vector<Series>& series,
               const std::string& xlabel, const std::string& ylabel) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (auto& s : series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!(x1 > x0)) x1 = x0 + 1;
    if (!(y1 > y0)) y1 = y0 + 1;
    const double W = 720, H = 480, ml = 70, mr = 20, mt = 20, mb = 50;
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - y0) / (y1 - y0) * (H - mt - mb); };
    std::ofstream o(path);
    if (!o) throw cli_error{EXIT_VALIDATION, "cannot open output file: " + path};
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    o << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    o << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
      << H - mb << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
      << "\" stroke=\"black\"/>\n";
    char buf[64];
    for (int t = 0; t <= 4; ++t) {
        double xv = x0 + (x1 - x0) * t / 4, yv = y0 + (y1 - y0) * t / 4;
        std::snprintf(buf, sizeof buf, "%.4g", xv);
        o << "<text x=\"" << px(xv) << "\" y=\"" << H - mb + 18
          << "\" font-size=\"12\" text-anchor=\"middle\">" << buf << "</text>\n";
        std::snprintf(buf, sizeof buf, "%.4g", yv);
        o << "<text x=\"" << ml - 6 << "\" y=\"" << py(yv) + 4
          << "\" font-size=\"12\" text-anchor=\"end\">" << buf << "</text>\n";
    }
    o << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 10
      << "\" font-size=\"13\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    o << "<text x=\"16\" y=\"" << (mt + H - mb) / 2 << "\" font-size=\"13\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 16 " << (mt + H - mb) / 2 << ")\">" << ylabel << "</text>\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    for (size_t k = 0; k < series.size(); ++k) {
        o << "<polyline fill=\"none\" stroke=\"" << colors[k % 5]
          << "\" stroke-width=\"1\" points=\"";
        for (size_t i = 0; i < series[k].x.size(); ++i)
            o << px(series[k].x[i]) << ',' << py(series[k].y[i]) << ' ';
        o << "\"/>\n";
    }
    o << "</svg>\n";
}

}  // namespace cli
