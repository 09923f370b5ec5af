#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "doe/correlation.hpp"
#include "doe/rng.hpp"
#include "reference_impls.hpp"

using namespace doe;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v(i++) = x;
    return v;
}

}  // namespace

TEST_CASE("spearman hand cases") {
    // classical rank formula, 3 distinct values
    CHECK(spearman(vec({1, 2, 3}), vec({3, 1, 2})) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(spearman(vec({1, 2, 3}), vec({1, 2, 3})) == doctest::Approx(1.0));
    CHECK(spearman(vec({1, 2, 3}), vec({3, 2, 1})) == doctest::Approx(-1.0));
    // zero rank variance on one side
    CHECK(spearman(vec({1, 1, 1}), vec({1, 2, 3})) == 0.0);
}

TEST_CASE("kendall hand cases") {
    CHECK(kendall(vec({1, 2, 3}), vec({1, 3, 2})) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(kendall(vec({1, 2, 3}), vec({1, 2, 3})) == doctest::Approx(1.0));
    CHECK(kendall(vec({1, 2, 3}), vec({3, 2, 1})) == doctest::Approx(-1.0));
    // tied pairs are neither concordant nor discordant but stay in the denominator
    CHECK(kendall(vec({1, 1, 2}), vec({1, 2, 3})) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("pearson hand case and degenerate input") {
    CHECK(pearson(vec({1, 2, 3}), vec({1, 3, 2})) == doctest::Approx(0.5));
    CHECK_THROWS_AS(pearson(vec({1, 1, 1}), vec({1, 2, 3})), std::domain_error);
}

TEST_CASE("estimators match naive references on random pairs with ties") {
    Rng rng(42, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 20;
        Eigen::VectorXd x(n), y(n);
        for (int i = 0; i < n; ++i) {
            // small integer alphabet forces ties
            x(i) = static_cast<double>(rng.index(8));
            y(i) = static_cast<double>(rng.index(8));
        }
        if ((x.array() == x(0)).all() || (y.array() == y(0)).all()) continue;
        CHECK(std::abs(pearson(x, y) - ref::pearson(x, y)) < 1e-12);
        CHECK(std::abs(spearman(x, y) - ref::spearman(x, y)) < 1e-12);
        CHECK(std::abs(kendall(x, y) - ref::kendall(x, y)) < 1e-12);
    }
}

TEST_CASE("rank correlations are invariant under strictly increasing transforms") {
    Rng rng(43, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 15;
        Eigen::VectorXd x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x(i) = static_cast<double>(rng.index(10));
            y(i) = rng.unit();
        }
        const Eigen::VectorXd tx = (x.array() * 0.3 + 1.0).exp();  // strictly increasing map
        CHECK(spearman(x, y) == doctest::Approx(spearman(tx, y)).epsilon(1e-12));
        CHECK(kendall(x, y) == doctest::Approx(kendall(tx, y)).epsilon(1e-12));
    }
}
