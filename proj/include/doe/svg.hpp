#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "doe/stats.hpp"

namespace doe {

/// Grey-scale grid heatmap; the minimum finite cell is black, the maximum
/// white. Non-finite cells render white with a dot marker. Row index of the
/// matrix maps to x, column index to y (y drawn upward).
std::string svg_heatmap(const Eigen::MatrixXd& grid, const std::string& title);

struct BoxPanel {
    std::string title;
    std::vector<std::string> labels;  // one per box
    std::vector<BoxplotStats> boxes;
};

/// Grid of mini box-plot panels, `columns` panels per row. Every panel is
/// scaled independently unless shared_scale is set.
std::string svg_boxplot_grid(const std::vector<BoxPanel>& panels, int columns,
                             const std::string& title, bool shared_scale = false);

struct HistPanel {
    std::string title;
    std::vector<int> counts;  // counts[v] = number of occurrences of value v
};

std::string svg_histogram_grid(const std::vector<HistPanel>& panels, int columns,
                               const std::string& title);

}  // namespace doe
