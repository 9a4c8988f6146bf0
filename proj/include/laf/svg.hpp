#ifndef LAF_SVG_HPP
#define LAF_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace laf {

// Minimal static line charts; just enough to eyeball a sweep.
struct SvgSeries {
    std::string label;
    std::string color = "#1f77b4";
    std::vector<std::pair<double, double>> points; // (x, y), any order
};

struct SvgPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
};

// Panels stacked vertically in one standalone SVG document. Each panel gets
// its own y-scale; axes, ticks and point markers are drawn for every series.
std::string render_panels(const std::vector<SvgPanel>& panels, int width = 640,
                          int panel_height = 300);

} // namespace laf

#endif
