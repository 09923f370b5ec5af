#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include "doe/criteria.hpp"
#include "doe/domain.hpp"
#include "doe/rng.hpp"

using namespace doe;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

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

const Design kSquareCorners = make_design({{0, 0}, {1, 0}, {0, 1}, {1, 1}});

/// All duplicate-free 4-point designs on the 4x4 grid (C(16,4) = 1820).
std::vector<Design> enumerate_4x4_designs() {
    std::vector<Design> designs;
    for (int a = 0; a < 16; ++a) {
        for (int b = a + 1; b < 16; ++b) {
            for (int c = b + 1; c < 16; ++c) {
                for (int d = c + 1; d < 16; ++d) {
                    Design design;
                    design.points.resize(4, 2);
                    const int cells[4] = {a, b, c, d};
                    for (int i = 0; i < 4; ++i) {
                        design.points(i, 0) = cells[i] % 4;
                        design.points(i, 1) = cells[i] / 4;
                    }
                    designs.push_back(std::move(design));
                }
            }
        }
    }
    return designs;
}

}  // namespace

TEST_CASE("AE pinned values") {
    CHECK(eval_ae(make_design({{0, 0}, {1, 0}})) == doctest::Approx(1.0));
    CHECK(eval_ae(kSquareCorners) == doctest::Approx(5.0));
    CHECK(eval_ae(make_design({{0, 0}, {1, 0}, {2, 0}})) == doctest::Approx(2.25));
    CHECK(eval_ae(make_design({{0, 0}, {0, 0}})) == kInf);
}

TEST_CASE("EMM pinned values") {
    CHECK(eval_emm(kSquareCorners) == doctest::Approx(-1.0));
    CHECK(eval_emm(make_design({{0, 0}, {3, 4}})) == doctest::Approx(-5.0));
    CHECK(eval_emm(make_design({{0, 0}, {0, 0}, {1, 1}})) == 0.0);
}

TEST_CASE("ML2 hand evaluations for a single point") {
    DomainSpec two = grid({2});
    CHECK(eval_ml2(make_design({{0}}), two) == doctest::Approx(1.0 / 3.0));
    CHECK(eval_ml2(make_design({{1}}), two) == doctest::Approx(1.0 / 3.0));
    DomainSpec three = grid({3});
    CHECK(eval_ml2(make_design({{1}}), three) == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("regression matrix layout") {
    DomainSpec domain = grid({2, 2});
    Design d = make_design({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 1}, {0, 0}});

    SUBCASE("full quadratic basis ordering") {
        DoptConfig cfg;
        cfg.base_degree = 2;
        const RegressionBasis basis = build_regression_matrix(d, domain, cfg);
        CHECK(basis.Z.cols() == 6);
        CHECK(basis.augmented.empty());
        for (int i = 0; i < d.point_count(); ++i) {
            const double x1 = d.points(i, 0);
            const double x2 = d.points(i, 1);
            CHECK(basis.Z(i, 0) == 1.0);
            CHECK(basis.Z(i, 1) == x1);
            CHECK(basis.Z(i, 2) == x2);
            CHECK(basis.Z(i, 3) == x1 * x1);
            CHECK(basis.Z(i, 4) == x2 * x2);
            CHECK(basis.Z(i, 5) == x1 * x2);
        }
    }

    SUBCASE("linear basis plus one pure-power augmentation per dimension") {
        DoptConfig cfg;
        cfg.base_degree = 1;
        cfg.bayes_terms = 1;
        const RegressionBasis basis = build_regression_matrix(d, domain, cfg);
        CHECK(basis.Z.cols() == 5);
        CHECK(basis.augmented == std::vector<int>{3, 4});
    }

    SUBCASE("no augmentation means empty augmented set") {
        DoptConfig cfg;
        cfg.base_degree = 1;
        const RegressionBasis basis = build_regression_matrix(d, domain, cfg);
        CHECK(basis.augmented.empty());
    }

    SUBCASE("too wide a basis is an error") {
        DoptConfig cfg;
        cfg.base_degree = 2;
        Design five = make_design({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 0}});
        CHECK_THROWS_AS(build_regression_matrix(five, domain, cfg), std::invalid_argument);
    }
}

TEST_CASE("Dopt pinned values") {
    DomainSpec domain = grid({2, 2});
    DoptConfig cfg;
    cfg.base_degree = 1;
    CHECK(eval_dopt(make_design({{0, 0}, {1, 0}, {0, 1}}), domain, cfg) == doctest::Approx(-1.0));
    // duplicate row with square Z: singular information matrix
    CHECK(eval_dopt(make_design({{0, 0}, {0, 0}, {0, 1}}), domain, cfg) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("CN pinned values") {
    DomainSpec domain = grid({2, 2});
    CHECK(eval_cn(kSquareCorners, domain) == doctest::Approx(1.0));

    DomainSpec d3 = grid({3, 3});
    // identical columns: singular cross-product matrix
    CHECK(eval_cn(make_design({{0, 0}, {1, 1}, {2, 2}}), d3) == kInf);
    // constant column is undefined
    CHECK_THROWS_AS(eval_cn(make_design({{0, 1}, {0, 2}}), d3), std::domain_error);

    // one flipped sign off the orthogonal two-level pattern
    const Design flipped = make_design({{0, 1}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(eval_cn(flipped, domain) > 1.0);
}

TEST_CASE("PMCC pinned values") {
    CHECK(eval_pmcc(make_design({{0, 0}, {1, 1}, {2, 2}})) == doctest::Approx(1.0));
    CHECK(eval_pmcc(kSquareCorners) == doctest::Approx(0.0));
    CHECK(eval_pmcc(make_design({{0, 0}, {1, 2}, {2, 1}})) == doctest::Approx(0.5));
    CHECK_THROWS_AS(eval_pmcc(make_design({{0, 0}, {0, 1}})), std::domain_error);
}

TEST_CASE("SRCC pinned values") {
    CHECK(eval_srcc(make_design({{0, 2}, {1, 0}, {2, 1}})) == doctest::Approx(0.5));
    CHECK(eval_srcc(make_design({{0, 0}, {1, 1}, {2, 2}})) == doctest::Approx(1.0));
    CHECK(eval_srcc(make_design({{0, 2}, {1, 1}, {2, 0}})) == doctest::Approx(1.0));
}

TEST_CASE("KRCC pinned values") {
    CHECK(eval_krcc(make_design({{0, 0}, {1, 2}, {2, 1}})) == doctest::Approx(1.0 / 3.0));
    CHECK(eval_krcc(make_design({{0, 0}, {1, 1}, {2, 2}})) == doctest::Approx(1.0));
    CHECK(eval_krcc(make_design({{0, 2}, {1, 1}, {2, 0}})) == doctest::Approx(1.0));
}

TEST_CASE("evaluate dispatches consistently") {
    DomainSpec domain = grid({2, 2});
    CHECK(evaluate(CriterionId::EMM, kSquareCorners, domain) == doctest::Approx(-1.0));
    CHECK(evaluate(CriterionId::PMCC, kSquareCorners, domain) == doctest::Approx(0.0));
    CHECK(evaluate(CriterionId::AE, kSquareCorners, domain) == doctest::Approx(5.0));
}

TEST_CASE("criterion names parse back") {
    for (CriterionId id : all_criteria()) {
        CHECK(parse_criterion(to_string(id)) == id);
    }
    CHECK(!parse_criterion("nope").has_value());
}

TEST_CASE("evaluators are invariant under row permutation") {
    DomainSpec domain = grid({5, 5});
    Rng rng(19, 2);
    DoptConfig dopt;
    dopt.bayes_terms = 1;
    for (int trial = 0; trial < 10; ++trial) {
        Design d;
        d.points.resize(5, 2);
        for (int i = 0; i < 5; ++i) {
            for (int c = 0; c < 2; ++c) d.points(i, c) = static_cast<int>(rng.index(5));
        }
        Design shuffled = d;
        std::vector<int> perm = {4, 2, 0, 3, 1};
        for (int i = 0; i < 5; ++i) {
            shuffled.points.row(i) = d.points.row(perm[static_cast<std::size_t>(i)]);
        }
        for (CriterionId id : all_criteria()) {
            double a, b;
            try {
                a = evaluate(id, d, domain, dopt);
            } catch (const std::exception&) {
                continue;
            }
            b = evaluate(id, shuffled, domain, dopt);
            if (std::isfinite(a)) {
                CHECK(a == doctest::Approx(b).epsilon(1e-12));
            } else {
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("value bounds") {
    DomainSpec domain = grid({4, 4});
    Rng rng(23, 9);
    const double pair_bound = std::sqrt(1.0);  // k=2: sqrt(k(k-1)/2) = 1
    for (int trial = 0; trial < 40; ++trial) {
        Design d;
        d.points.resize(6, 2);
        for (int i = 0; i < 6; ++i) {
            for (int c = 0; c < 2; ++c) d.points(i, c) = static_cast<int>(rng.index(4));
        }
        CHECK(eval_srcc(d) <= pair_bound + 1e-12);
        CHECK(eval_krcc(d) >= 0.0);
        CHECK(eval_krcc(d) <= pair_bound + 1e-12);
        try {
            CHECK(eval_cn(d, domain) >= 1.0 - 1e-12);
        } catch (const std::domain_error&) {
            // constant column; undefined by contract
        }
        CHECK(eval_emm(d) <= 0.0);
    }
}

TEST_CASE("exhaustive 4x4 oracle: evaluator reproduces the enumerated minimum") {
    const DomainSpec domain = grid({4, 4});
    const auto designs = enumerate_4x4_designs();
    REQUIRE(designs.size() == 1820);
    DoptConfig dopt;
    dopt.bayes_terms = 1;
    for (CriterionId id : all_criteria()) {
        double best = kInf;
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < designs.size(); ++i) {
            double v;
            try {
                v = evaluate(id, designs[i], domain, dopt);
            } catch (const std::exception&) {
                continue;
            }
            if (v < best) {
                best = v;
                best_idx = i;
            }
        }
        REQUIRE(std::isfinite(best));
        CHECK(evaluate(id, designs[best_idx], domain, dopt) == best);
        if (id == CriterionId::EMM) CHECK(best == doctest::Approx(-3.0));
    }
}

TEST_CASE("landscape scans reproduce the qualitative optima") {
    const int g = 11;
    DomainSpec domain = grid({g, g});

    SUBCASE("AE marks occupied cells as infinite") {
        Design fixed = make_design({{0, 0}, {g - 1, 0}, {0, g - 1}});
        const Eigen::MatrixXd scan = landscape_scan(CriterionId::AE, fixed, domain);
        CHECK(scan(0, 0) == kInf);
        CHECK(scan(g - 1, 0) == kInf);
        CHECK(scan(0, g - 1) == kInf);
        CHECK(std::isfinite(scan(5, 5)));
        CHECK(scan.rows() == g);
        CHECK(scan.cols() == g);
    }

    SUBCASE("ML2 optimum sits inside the free quadrant, not at the free corner") {
        Design fixed = make_design({{0, 0}, {g - 1, 0}, {0, g - 1}});
        const Eigen::MatrixXd scan = landscape_scan(CriterionId::ML2, fixed, domain);
        int bi = -1, bj = -1;
        double best = kInf;
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j) {
                if (scan(i, j) < best) {
                    best = scan(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        CHECK(bi > g / 2);
        CHECK(bj > g / 2);
        CHECK(bi < g - 1);
        CHECK(bj < g - 1);
    }

    SUBCASE("linear-basis Dopt optimum is an occupied corner") {
        Design fixed = make_design({{0, 0}, {g - 1, 0}, {0, g - 1}, {g - 1, g - 1}});
        DoptConfig plain;
        plain.bayes_terms = 0;
        const Eigen::MatrixXd scan = landscape_scan(CriterionId::Dopt, fixed, domain, plain);
        const double global_min = scan.minCoeff();
        const double corner_min =
            std::min({scan(0, 0), scan(g - 1, 0), scan(0, g - 1), scan(g - 1, g - 1)});
        CHECK(corner_min == doctest::Approx(global_min).epsilon(1e-12));
    }

    SUBCASE("CN values the duplicated opposite corner like the complete corner set") {
        Design fixed = make_design({{0, 0}, {g - 1, 0}, {0, g - 1}});
        const Eigen::MatrixXd scan = landscape_scan(CriterionId::CN, fixed, domain);
        CHECK(std::abs(scan(0, 0) - scan(g - 1, g - 1)) < 1e-10);
        CHECK(scan(g - 1, g - 1) == doctest::Approx(1.0));
    }
}
