#include "ltikit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ltikit/csv.hpp"

namespace ltikit {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string fmt(double v) {
    // short fixed formatting keeps the files small; values are plot coordinates
    const double r = std::round(v * 100.0) / 100.0;
    return format_double(r == 0.0 ? 0.0 : r);
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<SvgSeries>& series,
                           bool log_x) {
    double xmin = std::numeric_limits<double>::max(), xmax = std::numeric_limits<double>::lowest();
    double ymin = xmin, ymax = xmax;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double xv = log_x ? std::log10(s.x[i]) : s.x[i];
            if (!std::isfinite(xv) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, xv);
            xmax = std::max(xmax, xv);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kWidth) +
           "\" height=\"" + fmt(kHeight) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";

    // frame and tick grid
    out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(plot_w) +
           "\" height=\"" + fmt(plot_h) + "\" fill=\"none\" stroke=\"#444444\"/>\n";
    const int ticks = 5;
    for (int t = 0; t <= ticks; ++t) {
        const double fx = xmin + (xmax - xmin) * t / ticks;
        const double fy = ymin + (ymax - ymin) * t / ticks;
        out += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(px(fx)) +
               "\" y2=\"" + fmt(kTop + plot_h) + "\" stroke=\"#dddddd\"/>\n";
        out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" +
               fmt(kLeft + plot_w) + "\" y2=\"" + fmt(py(fy)) + "\" stroke=\"#dddddd\"/>\n";
        const double xv = log_x ? std::pow(10.0, fx) : fx;
        out += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(kTop + plot_h + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(std::round(xv * 1000.0) / 1000.0) + "</text>\n";
        out += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(py(fy) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(std::round(fy * 1000.0) / 1000.0) + "</text>\n";
    }
    out += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" + fmt(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + x_label +
           "</text>\n";
    out += "<text x=\"16\" y=\"" + fmt(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
           fmt(kTop + plot_h / 2) + ")\">" + y_label + "</text>\n";

    double legend_y = kTop + 14.0;
    for (const auto& s : series) {
        std::string points;
        bool pen_down = false;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double xv = log_x ? std::log10(s.x[i]) : s.x[i];
            if (!std::isfinite(xv) || !std::isfinite(s.y[i])) continue;
            const double cy = std::clamp(py(s.y[i]), kTop, kTop + plot_h);
            points += (pen_down ? " " : "") + fmt(px(xv)) + "," + fmt(cy);
            pen_down = true;
        }
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"" +
               points + "\"/>\n";
        out += "<line x1=\"" + fmt(kLeft + plot_w - 120) + "\" y1=\"" + fmt(legend_y) + "\" x2=\"" +
               fmt(kLeft + plot_w - 96) + "\" y2=\"" + fmt(legend_y) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\"/>\n";
        out += "<text x=\"" + fmt(kLeft + plot_w - 90) + "\" y=\"" + fmt(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + s.name + "</text>\n";
        legend_y += 16.0;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ltikit
