#include <doctest.h>

#include <Eigen/Dense>
#include <stdexcept>

#include "doe/domain.hpp"
#include "doe/rng.hpp"
#include "doe/transforms.hpp"

using namespace doe;

namespace {

Design make_design(std::initializer_list<std::initializer_list<int>> rows) {
    Design d;
    const int n = static_cast<int>(rows.size());
    const int k = static_cast<int>(rows.begin()->size());
    d.points.resize(n, k);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) d.points(i, j++) = v;
        ++i;
    }
    return d;
}

DomainSpec grid(std::initializer_list<int> levels) {
    DomainSpec domain;
    domain.levels = levels;
    return domain;
}

}  // namespace

TEST_CASE("DomainSpec validation") {
    DomainSpec domain = grid({10, 7});
    CHECK_NOTHROW(domain.validate());
    CHECK(domain.total_cells() == 70);

    DomainSpec bad = grid({10, 1});
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    DomainSpec with_values = grid({3});
    with_values.values.push_back((Eigen::VectorXd(3) << 1.0, 2.0, 5.0).finished());
    CHECK_NOTHROW(with_values.validate());
    CHECK(with_values.value_at(0, 2) == 5.0);

    DomainSpec decreasing = grid({3});
    decreasing.values.push_back((Eigen::VectorXd(3) << 1.0, 1.0, 5.0).finished());
    CHECK_THROWS_AS(decreasing.validate(), std::invalid_argument);
}

TEST_CASE("design validation catches range and LH violations") {
    DomainSpec domain = grid({4, 4});
    Design ok = make_design({{0, 0}, {3, 3}});
    CHECK_NOTHROW(validate_design(ok, domain));

    Design oor = make_design({{0, 0}, {4, 0}});
    CHECK_THROWS_AS(validate_design(oor, domain), std::invalid_argument);

    Design lh = make_design({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    lh.lh_constrained = true;
    CHECK_NOTHROW(validate_design(lh, domain));
    Design not_lh = make_design({{0, 1}, {0, 2}, {2, 3}, {3, 0}});
    not_lh.lh_constrained = true;
    CHECK_THROWS_AS(validate_design(not_lh, domain), std::invalid_argument);
}

TEST_CASE("normalize_unit endpoints and midpoint") {
    DomainSpec d10 = grid({10});
    CHECK(normalize_unit(make_design({{0}}), d10)(0, 0) == 0.0);
    CHECK(normalize_unit(make_design({{9}}), d10)(0, 0) == 1.0);
    DomainSpec d7 = grid({7});
    CHECK(normalize_unit(make_design({{3}}), d7)(0, 0) == 0.5);
}

TEST_CASE("normalize_unit is monotone per dimension") {
    DomainSpec d = grid({13});
    Design all = make_design({{0}});
    all.points.resize(13, 1);
    for (int i = 0; i < 13; ++i) all.points(i, 0) = i;
    const Eigen::MatrixXd u = normalize_unit(all, d);
    for (int i = 1; i < 13; ++i) CHECK(u(i, 0) > u(i - 1, 0));
}

TEST_CASE("center_scale pinned columns") {
    DomainSpec d2 = grid({2});
    Design two = make_design({{0}, {1}, {0}, {1}});
    const Eigen::MatrixXd a = center_scale(two, d2);
    CHECK(a(0, 0) == doctest::Approx(-1.0));
    CHECK(a(1, 0) == doctest::Approx(1.0));
    CHECK(a(2, 0) == doctest::Approx(-1.0));
    CHECK(a(3, 0) == doctest::Approx(1.0));

    DomainSpec d3 = grid({3});
    const Eigen::MatrixXd b = center_scale(make_design({{0}, {1}, {2}}), d3);
    CHECK(b(0, 0) == doctest::Approx(-1.0));
    CHECK(b(1, 0) == doctest::Approx(0.0));
    CHECK(b(2, 0) == doctest::Approx(1.0));

    DomainSpec d4 = grid({4});
    const Eigen::MatrixXd c = center_scale(make_design({{0}, {0}, {3}}), d4);
    CHECK(c(0, 0) == doctest::Approx(-0.5));
    CHECK(c(1, 0) == doctest::Approx(-0.5));
    CHECK(c(2, 0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(center_scale(make_design({{1}, {1}, {1}}), d4), std::domain_error);
}

TEST_CASE("center_scale invariants on random columns") {
    Rng rng(7, 0);
    DomainSpec domain = grid({9, 9, 9});
    for (int trial = 0; trial < 50; ++trial) {
        Design d;
        d.points.resize(6, 3);
        bool constant = false;
        for (int c = 0; c < 3; ++c) {
            for (int i = 0; i < 6; ++i) d.points(i, c) = static_cast<int>(rng.index(9));
            if ((d.points.col(c).array() == d.points(0, c)).all()) constant = true;
        }
        if (constant) continue;
        const Eigen::MatrixXd x = center_scale(d, domain);
        for (int c = 0; c < 3; ++c) {
            CHECK(std::abs(x.col(c).sum()) < 1e-12);
            CHECK(x.col(c).cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("ranks pinned examples") {
    Eigen::VectorXd a(3);
    a << 5, 1, 3;
    const Eigen::VectorXd ra = ranks(a);
    CHECK(ra(0) == 3.0);
    CHECK(ra(1) == 1.0);
    CHECK(ra(2) == 2.0);

    Eigen::VectorXd b(4);
    b << 10, 20, 20, 30;
    const Eigen::VectorXd rb = ranks(b);
    CHECK(rb(0) == 1.0);
    CHECK(rb(1) == 2.5);
    CHECK(rb(2) == 2.5);
    CHECK(rb(3) == 4.0);

    Eigen::VectorXd c(3);
    c << 7, 7, 7;
    const Eigen::VectorXd rc = ranks(c);
    CHECK(rc(0) == 2.0);
    CHECK(rc(1) == 2.0);
    CHECK(rc(2) == 2.0);
}

TEST_CASE("ranks properties: sum and permutation equivariance") {
    Rng rng(11, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.index(10));
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = static_cast<double>(rng.index(6));
        const Eigen::VectorXd r = ranks(v);
        CHECK(r.sum() == doctest::Approx(n * (n + 1) / 2.0));
        CHECK(r.minCoeff() >= 1.0);
        CHECK(r.maxCoeff() <= static_cast<double>(n));

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        Eigen::VectorXd pv(n);
        for (int i = 0; i < n; ++i) pv(i) = v(perm[static_cast<std::size_t>(i)]);
        const Eigen::VectorXd pr = ranks(pv);
        for (int i = 0; i < n; ++i) {
            CHECK(pr(i) == doctest::Approx(r(perm[static_cast<std::size_t>(i)])));
        }
    }
}

TEST_CASE("pairwise squared distances") {
    CHECK(pairwise_sq_distances(make_design({{0, 0}, {1, 0}}))(0) == 1.0);
    CHECK(pairwise_sq_distances(make_design({{0, 0}, {3, 4}}))(0) == 25.0);

    const Eigen::VectorXd d =
        pairwise_sq_distances(make_design({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    // lexicographic pair order over rows (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    CHECK(d(0) == 1.0);
    CHECK(d(1) == 1.0);
    CHECK(d(2) == 2.0);
    CHECK(d(3) == 2.0);
    CHECK(d(4) == 1.0);
    CHECK(d(5) == 1.0);

    CHECK_THROWS_AS(pairwise_sq_distances(make_design({{0, 0}})), std::invalid_argument);
}

TEST_CASE("project and redundant_count") {
    const Design a = make_design({{0, 0}, {0, 1}});
    const Design pa = project(a, {0});
    CHECK(pa.points(0, 0) == 0);
    CHECK(pa.points(1, 0) == 0);

    const Design b = make_design({{1, 2}, {3, 2}});
    const Design pb = project(b, {1});
    CHECK(pb.points(0, 0) == 2);
    CHECK(pb.points(1, 0) == 2);
    CHECK(redundant_count(pb) == 1);

    const Design identity = project(b, {0, 1});
    CHECK(identity.points == b.points);

    CHECK_THROWS_AS(project(b, {}), std::invalid_argument);

    CHECK(redundant_count(make_design({{0}, {0}, {1}})) == 1);
    CHECK(redundant_count(make_design({{2}, {2}, {2}})) == 2);
    CHECK(redundant_count(make_design({{0, 1}, {1, 0}})) == 0);
}

TEST_CASE("projection onto all dimensions keeps duplicate-free designs intact") {
    Rng rng(3, 5);
    DomainSpec domain = grid({5, 5, 5});
    for (int trial = 0; trial < 20; ++trial) {
        Design d;
        d.points.resize(8, 3);
        for (int i = 0; i < 8; ++i) {
            for (int c = 0; c < 3; ++c) d.points(i, c) = static_cast<int>(rng.index(5));
        }
        if (has_duplicate_rows(d)) continue;
        CHECK(redundant_count(project(d, {0, 1, 2})) == 0);
    }
}

TEST_CASE("cell id round trip") {
    DomainSpec domain = grid({4, 7, 3});
    Rng rng(1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t id = rng.index(domain.total_cells());
        CHECK(cell_id(cell_coords(id, domain), domain) == id);
    }
}
