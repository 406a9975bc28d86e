#pragma once

#include <string>
#include <vector>

namespace sqzsim {

// Deterministic CSV writer: fixed %.12g formatting so identical inputs give
// byte-identical files. Leading `# key=value` header lines are optional.
class CsvWriter {
public:
    CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}
    void add_header(const std::string& key, const std::string& value);
    void add_header(const std::string& key, double value);
    void add_row(const std::vector<double>& row);
    void write(const std::string& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> headers_;
    std::vector<std::vector<double>> rows_;
};

std::string format_double(double v);

// Minimal line plot, one or more series over a shared x column.
struct SvgSeries {
    std::string label;
    std::string color = "#1f77b4";
    std::vector<double> x;
    std::vector<double> y;
};

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series);

}  // namespace sqzsim
