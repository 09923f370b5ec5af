#include "doe/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace doe {

namespace {

double quantile_sorted(const std::vector<double>& v, double p) {
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return v[lo] + frac * (v[hi] - v[lo]);
}

}  // namespace

BoxplotStats boxplot_stats(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("boxplot_stats: empty input");
    std::sort(values.begin(), values.end());
    BoxplotStats s;
    s.min = values.front();
    s.q1 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.q3 = quantile_sorted(values, 0.75);
    s.max = values.back();
    s.count = static_cast<int>(values.size());
    return s;
}

}  // namespace doe
