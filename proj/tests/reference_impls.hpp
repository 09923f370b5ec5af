#pragma once

// Deliberately naive O(n^2) reference implementations, kept independent of
// the library code paths they check.

#include <Eigen/Dense>
#include <cmath>

namespace ref {

inline Eigen::VectorXd midranks(const Eigen::VectorXd& v) {
    const auto n = v.size();
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        int less = 0;
        int equal = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (v(j) < v(i)) ++less;
            if (v(j) == v(i)) ++equal;
        }
        r(i) = less + 0.5 * (equal + 1);
    }
    return r;
}

inline double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const auto n = x.size();
    double mx = 0.0, my = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        mx += x(i);
        my += y(i);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        sxy += (x(i) - mx) * (y(i) - my);
        sxx += (x(i) - mx) * (x(i) - mx);
        syy += (y(i) - my) * (y(i) - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

inline double spearman(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return pearson(midranks(x), midranks(y));
}

inline double kendall(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const auto n = x.size();
    double net = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool cx = x(i) < x(j);
            const bool cy = y(i) < y(j);
            if (x(i) != x(j) && y(i) != y(j)) net += (cx == cy) ? 0.5 : -0.5;
        }
    }
    return net / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace ref
