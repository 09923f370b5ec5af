#include "doe/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doe/transforms.hpp"

namespace doe {

bool has_ties(const Eigen::Ref<const Eigen::VectorXd>& values) {
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

namespace {

double pearson_impl(const Eigen::Ref<const Eigen::VectorXd>& x,
                    const Eigen::Ref<const Eigen::VectorXd>& y, bool zero_on_degenerate) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    if (x.size() < 2) throw std::invalid_argument("pearson: need at least two samples");
    const Eigen::VectorXd dx = x.array() - x.mean();
    const Eigen::VectorXd dy = y.array() - y.mean();
    const double sxx = dx.squaredNorm();
    const double syy = dy.squaredNorm();
    if (sxx == 0.0 || syy == 0.0) {
        if (zero_on_degenerate) return 0.0;
        throw std::domain_error("pearson: zero-variance column");
    }
    return dx.dot(dy) / std::sqrt(sxx * syy);
}

}  // namespace

double pearson(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y) {
    return pearson_impl(x, y, false);
}

double spearman(const Eigen::Ref<const Eigen::VectorXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
    const auto n = x.size();
    if (n < 2) throw std::invalid_argument("spearman: need at least two samples");
    const Eigen::VectorXd rx = ranks(x);
    const Eigen::VectorXd ry = ranks(y);
    if (has_ties(x) || has_ties(y)) {
        return pearson_impl(rx, ry, true);
    }
    const double nn = static_cast<double>(n);
    const double d2 = (rx - ry).squaredNorm();
    return 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0));
}

double kendall(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("kendall: length mismatch");
    const auto n = x.size();
    if (n < 2) throw std::invalid_argument("kendall: need at least two samples");
    long concordant = 0;
    long discordant = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double sx = x(j) - x(i);
            const double sy = y(j) - y(i);
            const double prod = sx * sy;
            if (prod > 0.0) {
                ++concordant;
            } else if (prod < 0.0) {
                ++discordant;
            }
        }
    }
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return static_cast<double>(concordant - discordant) / pairs;
}

}  // namespace doe
