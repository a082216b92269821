// svg.hpp: minimal self-contained SVG line/stem plots for the emitted data.

#pragma once

#include <string>
#include <vector>

namespace qwalk {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
    std::string color = "#1f4e9c";
    bool dashed = false;
    bool stems = false;  // vertical stem + marker per point, else a polyline
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

// A complete <svg> document (no external assets).
std::string render_plot_svg(const PlotSpec& spec);

}  // namespace qwalk
