#include "doe/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace doe {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void open_svg(std::ostringstream& out, double width, double height, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"8\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\">" << title
            << "</text>\n";
    }
}

}  // namespace

std::string svg_heatmap(const Eigen::MatrixXd& grid, const std::string& title) {
    const int m0 = static_cast<int>(grid.rows());
    const int m1 = static_cast<int>(grid.cols());
    const double cell = std::max(4.0, std::min(24.0, 480.0 / std::max(m0, m1)));
    const double pad = 24.0;
    const double width = pad * 2 + cell * m0;
    const double height = pad * 2 + cell * m1;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m0; ++i) {
        for (int j = 0; j < m1; ++j) {
            const double v = grid(i, j);
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    const double span = (hi > lo) ? (hi - lo) : 1.0;

    std::ostringstream out;
    open_svg(out, width, height, title);
    for (int i = 0; i < m0; ++i) {
        for (int j = 0; j < m1; ++j) {
            const double x = pad + i * cell;
            const double y = pad + (m1 - 1 - j) * cell;
            const double v = grid(i, j);
            int grey = 255;
            const bool finite = std::isfinite(v);
            if (finite) {
                grey = static_cast<int>(std::lround(255.0 * (v - lo) / span));
                grey = std::clamp(grey, 0, 255);
            }
            out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(cell)
                << "\" height=\"" << num(cell) << "\" fill=\"rgb(" << grey << ',' << grey << ','
                << grey << ")\" stroke=\"rgb(200,200,200)\" stroke-width=\"0.25\"/>\n";
            if (!finite) {
                out << "<circle cx=\"" << num(x + cell / 2) << "\" cy=\"" << num(y + cell / 2)
                    << "\" r=\"" << num(cell / 6) << "\" fill=\"rgb(220,60,60)\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_boxplot_grid(const std::vector<BoxPanel>& panels, int columns,
                             const std::string& title, bool shared_scale) {
    const double panel_w = 180.0;
    const double panel_h = 140.0;
    const double pad = 10.0;
    const double top = 28.0;
    const int cols = std::max(1, columns);
    const int rows = (static_cast<int>(panels.size()) + cols - 1) / cols;
    const double width = pad + cols * (panel_w + pad);
    const double height = top + rows * (panel_h + pad) + pad;

    double global_lo = std::numeric_limits<double>::infinity();
    double global_hi = -std::numeric_limits<double>::infinity();
    if (shared_scale) {
        for (const auto& p : panels) {
            for (const auto& b : p.boxes) {
                global_lo = std::min(global_lo, b.min);
                global_hi = std::max(global_hi, b.max);
            }
        }
    }

    std::ostringstream out;
    open_svg(out, width, height, title);
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        const double px = pad + static_cast<double>(p % static_cast<std::size_t>(cols)) * (panel_w + pad);
        const double py = top + static_cast<double>(p / static_cast<std::size_t>(cols)) * (panel_h + pad);

        double lo = global_lo;
        double hi = global_hi;
        if (!shared_scale) {
            lo = std::numeric_limits<double>::infinity();
            hi = -std::numeric_limits<double>::infinity();
            for (const auto& b : panel.boxes) {
                lo = std::min(lo, b.min);
                hi = std::max(hi, b.max);
            }
        }
        if (!(hi > lo)) {
            hi = lo + 1.0;
            lo -= 1.0;
        }
        const double plot_top = py + 16.0;
        const double plot_h = panel_h - 28.0;
        auto ypos = [&](double v) { return plot_top + plot_h * (1.0 - (v - lo) / (hi - lo)); };

        out << "<rect x=\"" << num(px) << "\" y=\"" << num(py) << "\" width=\"" << num(panel_w)
            << "\" height=\"" << num(panel_h)
            << "\" fill=\"none\" stroke=\"rgb(120,120,120)\" stroke-width=\"0.5\"/>\n";
        out << "<text x=\"" << num(px + 4) << "\" y=\"" << num(py + 12)
            << "\" font-family=\"sans-serif\" font-size=\"9\">" << panel.title << "</text>\n";

        const int nb = static_cast<int>(panel.boxes.size());
        const double slot = panel_w / std::max(1, nb);
        for (int b = 0; b < nb; ++b) {
            const auto& box = panel.boxes[static_cast<std::size_t>(b)];
            const double cx = px + slot * (b + 0.5);
            const double half = std::min(8.0, slot * 0.3);
            out << "<line x1=\"" << num(cx) << "\" y1=\"" << num(ypos(box.min)) << "\" x2=\""
                << num(cx) << "\" y2=\"" << num(ypos(box.max))
                << "\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
            out << "<rect x=\"" << num(cx - half) << "\" y=\"" << num(ypos(box.q3)) << "\" width=\""
                << num(2 * half) << "\" height=\"" << num(std::max(0.5, ypos(box.q1) - ypos(box.q3)))
                << "\" fill=\"rgb(210,210,230)\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
            out << "<line x1=\"" << num(cx - half) << "\" y1=\"" << num(ypos(box.median))
                << "\" x2=\"" << num(cx + half) << "\" y2=\"" << num(ypos(box.median))
                << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            if (b < static_cast<int>(panel.labels.size())) {
                out << "<text x=\"" << num(cx) << "\" y=\"" << num(py + panel_h - 3)
                    << "\" font-family=\"sans-serif\" font-size=\"7\" text-anchor=\"middle\">"
                    << panel.labels[static_cast<std::size_t>(b)] << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_histogram_grid(const std::vector<HistPanel>& panels, int columns,
                               const std::string& title) {
    const double panel_w = 180.0;
    const double panel_h = 140.0;
    const double pad = 10.0;
    const double top = 28.0;
    const int cols = std::max(1, columns);
    const int rows = (static_cast<int>(panels.size()) + cols - 1) / cols;
    const double width = pad + cols * (panel_w + pad);
    const double height = top + rows * (panel_h + pad) + pad;

    std::ostringstream out;
    open_svg(out, width, height, title);
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        const double px = pad + static_cast<double>(p % static_cast<std::size_t>(cols)) * (panel_w + pad);
        const double py = top + static_cast<double>(p / static_cast<std::size_t>(cols)) * (panel_h + pad);
        int peak = 1;
        for (int c : panel.counts) peak = std::max(peak, c);

        out << "<rect x=\"" << num(px) << "\" y=\"" << num(py) << "\" width=\"" << num(panel_w)
            << "\" height=\"" << num(panel_h)
            << "\" fill=\"none\" stroke=\"rgb(120,120,120)\" stroke-width=\"0.5\"/>\n";
        out << "<text x=\"" << num(px + 4) << "\" y=\"" << num(py + 12)
            << "\" font-family=\"sans-serif\" font-size=\"9\">" << panel.title << "</text>\n";

        const int nb = static_cast<int>(panel.counts.size());
        const double slot = (panel_w - 8.0) / std::max(1, nb);
        const double plot_top = py + 16.0;
        const double plot_h = panel_h - 30.0;
        for (int b = 0; b < nb; ++b) {
            const double h = plot_h * panel.counts[static_cast<std::size_t>(b)] / peak;
            out << "<rect x=\"" << num(px + 4 + slot * b + 1) << "\" y=\""
                << num(plot_top + plot_h - h) << "\" width=\"" << num(std::max(1.0, slot - 2))
                << "\" height=\"" << num(h)
                << "\" fill=\"rgb(150,150,170)\" stroke=\"black\" stroke-width=\"0.4\"/>\n";
            out << "<text x=\"" << num(px + 4 + slot * (b + 0.5)) << "\" y=\""
                << num(py + panel_h - 3)
                << "\" font-family=\"sans-serif\" font-size=\"7\" text-anchor=\"middle\">" << b
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace doe
