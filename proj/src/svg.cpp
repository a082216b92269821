#include "qwalk/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace qwalk {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 64, kRight = 24, kTop = 40, kBottom = 52;

std::string fmt(double v, int precision = 6)
{
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                                 precision);
    return std::string(buf, p);
}

// A loose 1-2-5 tick spacing for the value range.
std::vector<double> ticks(double lo, double hi)
{
    if (!(hi > lo)) return {lo};
    const double span = hi - lo;
    double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double unit = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) { unit = m * mag; break; }
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / unit) * unit; t <= hi + 1e-12 * span; t += unit)
        out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
    return out;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_plot_svg(const PlotSpec& spec)
{
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const PlotSeries& s : spec.series) {
        for (const auto& [x, y] : s.points) {
            if (first) { xmin = xmax = x; ymin = ymax = y; first = false; continue; }
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin) { xmin -= 1; xmax += 1; }
    if (ymax == ymin) { ymin -= 1; ymax += 1; }
    ymin = std::min(ymin, 0.0);  // stems drop to the zero line
    const double ypad = 0.05 * (ymax - ymin);
    ymax += ypad;

    const auto sx = [&](double x) {
        return kLeft + (x - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight);
    };
    const auto sy = [&](double y) {
        return kHeight - kBottom - (y - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
           "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " +
           fmt(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" + escape(spec.title) + "</text>\n";

    // axes
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kHeight - kBottom) + "\" x2=\"" +
           fmt(kWidth - kRight) + "\" y2=\"" + fmt(kHeight - kBottom) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(kHeight - kBottom) + "\" stroke=\"black\"/>\n";

    for (double t : ticks(xmin, xmax)) {
        const double px = sx(t);
        svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kHeight - kBottom) + "\" x2=\"" +
               fmt(px) + "\" y2=\"" + fmt(kHeight - kBottom + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(kHeight - kBottom + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt(t, 4) + "</text>\n";
    }
    for (double t : ticks(ymin, ymax)) {
        const double py = sy(t);
        svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(py) + "\" x2=\"" + fmt(kLeft) +
               "\" y2=\"" + fmt(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt(t, 4) + "</text>\n";
    }
    svg += "<text x=\"" + fmt((kLeft + kWidth - kRight) / 2) + "\" y=\"" + fmt(kHeight - 14) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           escape(spec.x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt((kTop + kHeight - kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " + fmt((kTop + kHeight - kBottom) / 2) + ")\">" +
           escape(spec.y_label) + "</text>\n";

    double legend_y = kTop + 6;
    for (const PlotSeries& s : spec.series) {
        const std::string dash = s.dashed ? " stroke-dasharray=\"6 4\"" : "";
        if (s.stems) {
            for (const auto& [x, y] : s.points) {
                svg += "<line x1=\"" + fmt(sx(x)) + "\" y1=\"" + fmt(sy(0.0)) + "\" x2=\"" +
                       fmt(sx(x)) + "\" y2=\"" + fmt(sy(y)) + "\" stroke=\"" + s.color +
                       "\"" + dash + "/>\n";
                svg += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
                       "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
            }
        } else if (!s.points.empty()) {
            std::string pts;
            for (const auto& [x, y] : s.points)
                pts += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
            svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\"" + dash +
                   " points=\"" + pts + "\"/>\n";
        }
        if (!s.label.empty()) {
            svg += "<line x1=\"" + fmt(kWidth - kRight - 130) + "\" y1=\"" + fmt(legend_y) +
                   "\" x2=\"" + fmt(kWidth - kRight - 104) + "\" y2=\"" + fmt(legend_y) +
                   "\" stroke=\"" + s.color + "\"" + dash + "/>\n";
            svg += "<text x=\"" + fmt(kWidth - kRight - 98) + "\" y=\"" + fmt(legend_y + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) +
                   "</text>\n";
            legend_y += 18;
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace qwalk
