#include <doctest.h>

#include <cmath>
#include <set>

#include "doe/annealer.hpp"
#include "doe/sampling.hpp"

using namespace doe;

namespace {

DomainSpec grid(std::initializer_list<int> levels) {
    DomainSpec domain;
    domain.levels = levels;
    return domain;
}

Design make_design(std::initializer_list<std::initializer_list<int>> rows, bool lh = false) {
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
    d.lh_constrained = lh;
    return d;
}

SAConfig quick_sa(std::int64_t n_max) {
    SAConfig cfg;
    cfg.n_max = n_max;
    return cfg;
}

}  // namespace

TEST_CASE("metropolis rule") {
    CHECK(metropolis_accept(1.0, 1.0, 1e-3, 1.0));       // equal value, exp(0)=1 >= u
    CHECK(metropolis_accept(2.0, 1.0, 1e-3, 0.999999));  // improvement always accepted
    // uphill by exactly t: acceptance probability is exp(-1)
    CHECK(!metropolis_accept(1.0, 1.5, 0.5, 0.5));  // 0.368 < 0.5
    CHECK(metropolis_accept(1.0, 1.5, 0.5, 0.3));   // 0.368 >= 0.3
    CHECK_THROWS_AS(metropolis_accept(1.0, 1.0, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("metropolis at vanishing temperature accepts only non-worse moves") {
    const double t = 1e-300;
    CHECK(metropolis_accept(1.0, 1.0, t, 1.0));
    CHECK(metropolis_accept(1.0, 0.999, t, 1.0));
    CHECK(!metropolis_accept(1.0, 1.0 + 1e-12, t, 1e-9));
}

TEST_CASE("empirical acceptance frequency at delta = t is exp(-1)") {
    Rng rng(101, 0);
    const double t = 0.37;
    int accepted = 0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        if (metropolis_accept(2.0, 2.0 + t, t, rng.unit())) ++accepted;
    }
    const double freq = static_cast<double>(accepted) / trials;
    CHECK(std::abs(freq - std::exp(-1.0)) < 0.02);
}

TEST_CASE("free move relocates exactly one row onto a free cell") {
    DomainSpec domain = grid({4, 4});
    Rng rng(7, 7);
    Design d = make_design({{0, 0}, {1, 0}, {0, 1}, {3, 3}});
    for (int trial = 0; trial < 200; ++trial) {
        const int row = trial % 4;
        const Design next = propose_free_move(d, domain, row, rng);
        CHECK(next.point_count() == 4);
        CHECK(!has_duplicate_rows(next));
        int changed = 0;
        for (int i = 0; i < 4; ++i) {
            if (next.points.row(i) != d.points.row(i)) ++changed;
        }
        CHECK(changed == 1);
        CHECK(next.points.row(row) != d.points.row(row));
    }
}

TEST_CASE("free move on an almost-full grid lands on the only free cell") {
    DomainSpec domain = grid({2, 2});
    Design d = make_design({{0, 0}, {1, 0}, {0, 1}});
    Rng rng(3, 3);
    const Design next = propose_free_move(d, domain, 1, rng);
    CHECK(next.points(1, 0) == 1);
    CHECK(next.points(1, 1) == 1);

    Design full = make_design({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(propose_free_move(full, domain, 0, rng), std::invalid_argument);
}

TEST_CASE("lh swap preserves column multisets and changes two rows") {
    Rng rng(9, 9);
    Design d = make_design({{0, 3}, {1, 1}, {2, 0}, {3, 2}}, true);
    for (int trial = 0; trial < 100; ++trial) {
        const Design next = propose_lh_swap(d, 0, rng);
        int changed = 0;
        for (int i = 0; i < 4; ++i) {
            if (next.points.row(i) != d.points.row(i)) ++changed;
        }
        CHECK(changed == 2);
        for (int c = 0; c < 2; ++c) {
            std::multiset<int> before(d.points.col(c).begin(), d.points.col(c).end());
            std::multiset<int> after(next.points.col(c).begin(), next.points.col(c).end());
            CHECK(before == after);
        }
    }

    SUBCASE("two-point swap flips the diagonal") {
        Design diag = make_design({{0, 0}, {1, 1}}, true);
        const Design next = propose_lh_swap(diag, 0, rng);
        const Design expected_a = make_design({{1, 0}, {0, 1}});
        const Design expected_b = make_design({{0, 1}, {1, 0}});
        CHECK((next.points == expected_a.points || next.points == expected_b.points));
    }

    SUBCASE("non-LH input is rejected") {
        Design free_design = make_design({{0, 0}, {1, 1}});
        CHECK_THROWS_AS(propose_lh_swap(free_design, 0, rng), std::invalid_argument);
    }
}

TEST_CASE("anneal on the forced full-grid design returns the start") {
    DomainSpec domain = grid({2, 2});
    Design full = make_design({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    Rng rng(17, 0);
    const OptResult res = anneal(full, CriterionId::AE, domain, quick_sa(1000), {}, rng);
    CHECK(res.best_value == doctest::Approx(5.0));
    CHECK(res.best.points == full.points);
}

TEST_CASE("anneal finds the EMM corner design on a 4x4 grid") {
    DomainSpec domain = grid({4, 4});
    Rng rng(23, 1);
    const Design start = random_free(domain, 4, rng);
    const OptResult res = anneal(start, CriterionId::EMM, domain, quick_sa(20000), {}, rng);
    CHECK(res.best_value == doctest::Approx(-3.0));
}

TEST_CASE("identical seeds give identical results") {
    DomainSpec domain = grid({6, 6});
    auto run = [&] {
        Rng rng(31, 5);
        const Design start = random_free(domain, 5, rng);
        return anneal(start, CriterionId::AE, domain, quick_sa(5000), {}, rng);
    };
    const OptResult a = run();
    const OptResult b = run();
    CHECK(a.best_value == b.best_value);
    CHECK(a.best.points == b.best.points);
    CHECK(a.history == b.history);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("best-ever history is non-increasing and bounds the final value") {
    DomainSpec domain = grid({6, 6});
    Rng rng(37, 8);
    const Design start = random_free(domain, 6, rng);
    const OptResult res = anneal(start, CriterionId::ML2, domain, quick_sa(20000), {}, rng);
    REQUIRE(!res.history.empty());
    for (std::size_t i = 1; i < res.history.size(); ++i) {
        CHECK(res.history[i] <= res.history[i - 1]);
    }
    CHECK(res.best_value <= res.history.front());
    CHECK(res.best_value == res.history.back());
    CHECK(res.evaluations == 20000);
}

TEST_CASE("lh annealing keeps the constraint") {
    DomainSpec domain = grid({8, 8});
    Rng rng(41, 2);
    const Design start = random_lh(domain, rng);
    const OptResult res = anneal(start, CriterionId::PMCC, domain, quick_sa(10000), {}, rng);
    CHECK(res.best.lh_constrained);
    CHECK_NOTHROW(validate_design(res.best, domain));
    CHECK(res.best_value <= evaluate(CriterionId::PMCC, start, domain));
}

TEST_CASE("anneal with frozen rows never moves them") {
    DomainSpec domain = grid({6, 6});
    Rng rng(43, 3);
    const Design start = random_free(domain, 6, rng);
    const OptResult res = anneal(start, CriterionId::AE, domain, quick_sa(5000), {}, rng, 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(res.best.points.row(i) == start.points.row(i));
    }
}
