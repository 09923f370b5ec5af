#include "doe/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace doe {

Eigen::MatrixXd normalize_unit(const Design& design, const DomainSpec& domain) {
    validate_design(design, domain);
    const int n = design.point_count();
    const int k = design.dimension();
    Eigen::MatrixXd out(n, k);
    for (int d = 0; d < k; ++d) {
        const double span = domain.levels[static_cast<std::size_t>(d)] - 1.0;
        out.col(d) = design.points.col(d).cast<double>() / span;
    }
    return out;
}

Eigen::MatrixXd center_scale(const Design& design, const DomainSpec& domain) {
    validate_design(design, domain);
    Eigen::MatrixXd out = design.points.cast<double>();
    for (int d = 0; d < out.cols(); ++d) {
        auto col = out.col(d);
        col.array() -= col.mean();
        const double scale = col.cwiseAbs().maxCoeff();
        if (scale == 0.0) {
            throw std::domain_error("center_scale: constant column " + std::to_string(d));
        }
        col /= scale;
    }
    return out;
}

Eigen::VectorXd ranks(const Eigen::Ref<const Eigen::VectorXd>& values) {
    const auto n = values.size();
    if (n == 0) throw std::invalid_argument("ranks: empty sequence");
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });

    Eigen::VectorXd r(n);
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && values(order[static_cast<std::size_t>(j + 1)]) ==
                                values(order[static_cast<std::size_t>(i)])) {
            ++j;
        }
        // positions i..j (0-based) tie; mid-rank is the average of i+1..j+1
        const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
        for (Eigen::Index t = i; t <= j; ++t) {
            r(order[static_cast<std::size_t>(t)]) = mid;
        }
        i = j + 1;
    }
    return r;
}

Eigen::VectorXd pairwise_sq_distances(const Design& design) {
    const int n = design.point_count();
    if (n < 2) throw std::invalid_argument("pairwise_sq_distances: need at least two points");
    Eigen::VectorXd out(static_cast<Eigen::Index>(n) * (n - 1) / 2);
    Eigen::Index p = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            out(p++) = (design.points.row(i) - design.points.row(j)).cast<double>().squaredNorm();
        }
    }
    return out;
}

}  // namespace doe
