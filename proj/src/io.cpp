#include "sqzsim/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sqzsim {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void CsvWriter::add_header(const std::string& key, const std::string& value) {
    headers_.emplace_back(key, value);
}

void CsvWriter::add_header(const std::string& key, double value) {
    headers_.emplace_back(key, format_double(value));
}

void CsvWriter::add_row(const std::vector<double>& row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("CsvWriter: row width does not match columns");
    rows_.push_back(row);
}

void CsvWriter::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("CsvWriter: cannot open " + path);
    for (const auto& [k, v] : headers_) out << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
}

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void grow(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    double span() const { return hi > lo ? hi - lo : 1.0; }
};

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series) {
    constexpr double W = 640, H = 420, ML = 70, MR = 20, MT = 40, MB = 50;
    Range xr, yr;
    for (const auto& s : series) {
        for (double v : s.x) xr.grow(v);
        for (double v : s.y) yr.grow(v);
    }
    auto px = [&](double x) { return ML + (x - xr.lo) / xr.span() * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - yr.lo) / yr.span() * (H - MT - MB); };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_svg_plot: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
        << "</text>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
        << H - MB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 12
        << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << (MT + H - MB) / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
        << (MT + H - MB) / 2 << ")\">" << y_label << "</text>\n";
    // Axis extent labels.
    out << "<text x=\"" << ML << "\" y=\"" << H - MB + 16 << "\" font-size=\"10\">"
        << format_double(xr.lo) << "</text>\n";
    out << "<text x=\"" << W - MR << "\" y=\"" << H - MB + 16
        << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(xr.hi) << "</text>\n";
    out << "<text x=\"" << ML - 6 << "\" y=\"" << H - MB << "\" text-anchor=\"end\" font-size=\"10\">"
        << format_double(yr.lo) << "</text>\n";
    out << "<text x=\"" << ML - 6 << "\" y=\"" << MT + 4
        << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(yr.hi) << "</text>\n";

    int legend_y = static_cast<int>(MT) + 8;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            out << px(s.x[i]) << "," << py(s.y[i]) << " ";
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<rect x=\"" << W - MR - 150 << "\" y=\"" << legend_y - 8
                << "\" width=\"12\" height=\"3\" fill=\"" << s.color << "\"/>\n";
            out << "<text x=\"" << W - MR - 132 << "\" y=\"" << legend_y
                << "\" font-size=\"11\">" << s.label << "</text>\n";
            legend_y += 16;
        }
    }
    out << "</svg>\n";
}

}  // namespace sqzsim
