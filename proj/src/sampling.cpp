#include "doe/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace doe {

Design random_free(const DomainSpec& domain, int n, Rng& rng) {
    domain.validate();
    const std::uint64_t cells = domain.total_cells();
    if (n < 1 || static_cast<std::uint64_t>(n) > cells) {
        throw std::invalid_argument("random_free: point count exceeds grid cell count");
    }
    std::unordered_set<std::uint64_t> used;
    used.reserve(static_cast<std::size_t>(n) * 2);
    Design design;
    design.points.resize(n, domain.dimension());
    for (int i = 0; i < n; ++i) {
        std::uint64_t id;
        do {
            id = rng.index(cells);
        } while (used.count(id));
        used.insert(id);
        design.points.row(i) = cell_coords(id, domain);
    }
    return design;
}

namespace {

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
}

}  // namespace

Design random_lh(const DomainSpec& domain, Rng& rng) {
    domain.validate();
    const int n = domain.levels[0];
    for (int m : domain.levels) {
        if (m != n) {
            throw std::invalid_argument("random_lh: unequal level counts, use mixed_lh");
        }
    }
    Design design;
    design.points.resize(n, domain.dimension());
    design.lh_constrained = true;
    for (int d = 0; d < domain.dimension(); ++d) {
        const auto perm = random_permutation(n, rng);
        for (int i = 0; i < n; ++i) design.points(i, d) = perm[static_cast<std::size_t>(i)];
    }
    return design;
}

int mixed_round_index(int i, int master_levels, int target_levels) {
    if (master_levels == target_levels) return i;
    const double t = static_cast<double>(i) * (target_levels - 1) / (master_levels - 1);
    return static_cast<int>(std::lround(t));
}

Design mixed_lh(const DomainSpec& domain, int n, Rng& rng) {
    domain.validate();
    if (std::find(domain.levels.begin(), domain.levels.end(), n) == domain.levels.end()) {
        throw std::invalid_argument("mixed_lh: no dimension has a level count equal to n");
    }
    // The master column keeps n distinct values, so full-row duplicates
    // cannot actually occur; the retry loop guards the contract anyway.
    constexpr int kMaxRetries = 64;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        Design design;
        design.points.resize(n, domain.dimension());
        design.lh_constrained = true;
        for (int d = 0; d < domain.dimension(); ++d) {
            const int m = domain.levels[static_cast<std::size_t>(d)];
            const auto perm = random_permutation(n, rng);
            for (int i = 0; i < n; ++i) {
                design.points(i, d) = mixed_round_index(perm[static_cast<std::size_t>(i)], n, m);
            }
        }
        if (!has_duplicate_rows(design)) return design;
    }
    throw std::runtime_error("mixed_lh: could not generate a duplicate-free design");
}

}  // namespace doe
