#include "laf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace laf {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    // Avoid a zero-height axis when all values coincide.
    void widen() {
        if (!(hi > lo)) {
            const double pad = std::max(1.0, std::abs(lo) * 0.1);
            lo -= pad;
            hi += pad;
        }
    }
};

} // namespace

std::string render_panels(const std::vector<SvgPanel>& panels, int width,
                          int panel_height) {
    const int total_height = panel_height * static_cast<int>(panels.size());
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" +
                      std::to_string(total_height) +
                      "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double margin_left = 80, margin_right = 24;
    const double margin_top = 40, margin_bottom = 52;

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const SvgPanel& panel = panels[p];
        const double top = static_cast<double>(p) * panel_height;
        const double x0 = margin_left;
        const double x1 = width - margin_right;
        const double y0 = top + margin_top;
        const double y1 = top + panel_height - margin_bottom;

        Range xr, yr;
        for (const SvgSeries& s : panel.series)
            for (const auto& [x, y] : s.points) {
                xr.include(x);
                yr.include(y);
            }
        if (!std::isfinite(xr.lo)) { xr = {0.0, 1.0}; yr = {0.0, 1.0}; }
        xr.widen();
        yr.widen();

        auto sx = [&](double x) {
            return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0);
        };
        auto sy = [&](double y) {
            return y1 - (y - yr.lo) / (yr.hi - yr.lo) * (y1 - y0);
        };

        svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(top + 20) +
               "\" text-anchor=\"middle\" font-size=\"14\">" + panel.title +
               "</text>\n";

        // Axes.
        svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y1) + "\" x2=\"" +
               num(x1) + "\" y2=\"" + num(y1) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
               num(x0) + "\" y2=\"" + num(y1) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";

        // Ticks and labels.
        const int ticks = 5;
        for (int i = 0; i <= ticks; ++i) {
            const double fx = xr.lo + (xr.hi - xr.lo) * i / ticks;
            const double px = sx(fx);
            svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(y1) +
                   "\" x2=\"" + num(px) + "\" y2=\"" + num(y1 + 5) +
                   "\" stroke=\"black\"/>\n";
            svg += "<text x=\"" + num(px) + "\" y=\"" + num(y1 + 18) +
                   "\" text-anchor=\"middle\">" + num(fx) + "</text>\n";

            const double fy = yr.lo + (yr.hi - yr.lo) * i / ticks;
            const double py = sy(fy);
            svg += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(py) +
                   "\" x2=\"" + num(x0) + "\" y2=\"" + num(py) +
                   "\" stroke=\"black\"/>\n";
            svg += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(py + 4) +
                   "\" text-anchor=\"end\">" + num(fy) + "</text>\n";
        }

        svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" +
               num(y1 + 38) + "\" text-anchor=\"middle\">" + panel.x_label +
               "</text>\n";
        svg += "<text x=\"" + num(top + 16) + "\" y=\"" + num(y0 - 10) +
               "\" font-size=\"11\">" + panel.y_label + "</text>\n";

        for (const SvgSeries& series : panel.series) {
            auto points = series.points;
            std::sort(points.begin(), points.end());
            std::string path;
            for (const auto& [x, y] : points) {
                path += path.empty() ? "M" : " L";
                path += num(sx(x)) + " " + num(sy(y));
            }
            svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" +
                   series.color + "\" stroke-width=\"1.5\"/>\n";
            for (const auto& [x, y] : points)
                svg += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" +
                       num(sy(y)) + "\" r=\"3\" fill=\"" + series.color +
                       "\"/>\n";
            if (!series.label.empty())
                svg += "<text x=\"" + num(x1 - 4) + "\" y=\"" +
                       num(y0 + 4) + "\" text-anchor=\"end\" fill=\"" +
                       series.color + "\">" + series.label + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace laf
