#pragma once

#include <span>
#include <string>
#include <vector>

namespace gdm::svg {

struct Series {
    std::string name;
    std::vector<double> x, y;
    bool dashed = false;
};

struct Panel {
    std::string title, x_label, y_label;
    std::vector<Series> series;
};

/// Minimal hand-emitted line chart: axes with ticks, one polyline per series,
/// legend. Panels are stacked vertically in one SVG document.
std::string render_line_chart(std::span<const Panel> panels, int width = 720,
                              int panel_height = 400);

} // namespace gdm::svg
