#pragma once

#include <string>
#include <vector>

namespace ltikit {

struct SvgSeries {
    std::string name;
    std::string color = "#1f6fb4";
    std::vector<double> x;
    std::vector<double> y;
};

/// Static single-panel SVG 1.1 line chart. Output is byte-deterministic for
/// identical inputs.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<SvgSeries>& series,
                           bool log_x = false);

}  // namespace ltikit
