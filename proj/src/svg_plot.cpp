#include "gdm/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gdm::svg {

namespace {

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void pad() {
        if (!(lo < hi)) {
            lo -= 0.5;
            hi += 0.5;
        } else {
            const double margin = 0.05 * (hi - lo);
            lo -= margin;
            hi += margin;
        }
    }
};

} // namespace

std::string render_line_chart(std::span<const Panel> panels, int width, int panel_height) {
    const int margin_left = 64, margin_right = 16, margin_top = 32, margin_bottom = 44;
    const int total_height = panel_height * static_cast<int>(panels.size());

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << total_height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const Panel& panel = panels[p];
        const int top = static_cast<int>(p) * panel_height;
        const double x0 = margin_left, x1 = width - margin_right;
        const double y0 = top + panel_height - margin_bottom, y1 = top + margin_top;

        Range rx, ry;
        for (const auto& s : panel.series) {
            for (double v : s.x) rx.include(v);
            for (double v : s.y) ry.include(v);
        }
        rx.pad();
        ry.pad();
        const auto px = [&](double v) { return x0 + (v - rx.lo) / (rx.hi - rx.lo) * (x1 - x0); };
        const auto py = [&](double v) { return y0 - (v - ry.lo) / (ry.hi - ry.lo) * (y0 - y1); };

        out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << top + 18
            << "\" text-anchor=\"middle\" font-weight=\"bold\">" << panel.title << "</text>\n";

        // Axes and ticks.
        out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
            << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
            << "\" stroke=\"black\"/>\n";
        const int ticks = 5;
        for (int i = 0; i <= ticks; ++i) {
            const double fx = rx.lo + (rx.hi - rx.lo) * i / ticks;
            const double fy = ry.lo + (ry.hi - ry.lo) * i / ticks;
            out << "<line x1=\"" << px(fx) << "\" y1=\"" << y0 << "\" x2=\"" << px(fx)
                << "\" y2=\"" << y0 + 4 << "\" stroke=\"black\"/>\n";
            out << "<text x=\"" << px(fx) << "\" y=\"" << y0 + 18
                << "\" text-anchor=\"middle\">" << num(fx) << "</text>\n";
            out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << py(fy) << "\" x2=\"" << x0
                << "\" y2=\"" << py(fy) << "\" stroke=\"black\"/>\n";
            out << "<text x=\"" << x0 - 8 << "\" y=\"" << py(fy) + 4
                << "\" text-anchor=\"end\">" << num(fy) << "</text>\n";
        }
        out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << y0 + 36
            << "\" text-anchor=\"middle\">" << panel.x_label << "</text>\n";
        out << "<text x=\"14\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\""
            << "rotate(-90 14 " << (y0 + y1) / 2 << ")\">" << panel.y_label << "</text>\n";

        // Series polylines and legend.
        for (std::size_t s = 0; s < panel.series.size(); ++s) {
            const Series& series = panel.series[s];
            const char* color = palette[s % (sizeof(palette) / sizeof(palette[0]))];
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
            if (series.dashed) out << " stroke-dasharray=\"6 4\"";
            out << " points=\"";
            for (std::size_t i = 0; i < series.x.size(); ++i) {
                if (i) out << ' ';
                out << num(px(series.x[i])) << ',' << num(py(series.y[i]));
            }
            out << "\"/>\n";
            const double ly = y1 + 14 + 16 * static_cast<double>(s);
            out << "<line x1=\"" << x1 - 130 << "\" y1=\"" << ly << "\" x2=\"" << x1 - 104
                << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.5\""
                << (series.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
            out << "<text x=\"" << x1 - 98 << "\" y=\"" << ly + 4 << "\">" << series.name
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace gdm::svg
