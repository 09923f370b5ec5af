#include "doe/sequential.hpp"

#include <stdexcept>
#include <unordered_set>

#include "doe/sampling.hpp"

namespace doe {

namespace {

Design stack(const Design& base, const Design& batch, bool lh) {
    Design out;
    out.points.resize(base.point_count() + batch.point_count(), base.dimension());
    out.points.topRows(base.point_count()) = base.points;
    out.points.bottomRows(batch.point_count()) = batch.points;
    out.lh_constrained = lh;
    return out;
}

}  // namespace

Design extend_free(const Design& seed, const DomainSpec& domain, const ExtensionPlan& plan,
                   CriterionId id, const SAConfig& cfg, const DoptConfig& dopt_cfg, Rng& rng) {
    validate_design(seed, domain);
    if (has_duplicate_rows(seed)) throw std::invalid_argument("extend_free: seed has duplicates");
    if (plan.batch_size < 1) throw std::invalid_argument("extend_free: batch_size must be >= 1");

    Design design = seed;
    design.lh_constrained = false;
    for (int iter = 0; iter < plan.iterations; ++iter) {
        const std::uint64_t cells = domain.total_cells();
        const int n_old = design.point_count();
        if (static_cast<std::uint64_t>(n_old + plan.batch_size) > cells) {
            throw std::invalid_argument("extend_free: grid exhausted");
        }
        // initial batch placement: uniform over cells unoccupied by the whole design
        std::unordered_set<std::uint64_t> occupied;
        for (int i = 0; i < n_old; ++i) occupied.insert(cell_id(design.points.row(i), domain));
        Design batch;
        batch.points.resize(plan.batch_size, domain.dimension());
        for (int i = 0; i < plan.batch_size; ++i) {
            std::uint64_t target;
            do {
                target = rng.index(cells);
            } while (occupied.count(target));
            occupied.insert(target);
            batch.points.row(i) = cell_coords(target, domain);
        }
        Design whole = stack(design, batch, false);
        design = anneal(whole, id, domain, cfg, dopt_cfg, rng, n_old).best;
    }
    return design;
}

Design extend_lh(const Design& seed, const DomainSpec& domain, const ExtensionPlan& plan,
                 CriterionId id, const SAConfig& cfg, const DoptConfig& dopt_cfg, Rng& rng) {
    validate_design(seed, domain);
    const int m = domain.levels[0];
    for (int levels : domain.levels) {
        if (levels != m) throw std::invalid_argument("extend_lh: square domains only");
    }
    if (plan.batch_size != m) {
        throw std::invalid_argument("extend_lh: batch_size must equal the level count");
    }
    if (seed.point_count() % m != 0) {
        throw std::invalid_argument("extend_lh: seed size must be a multiple of the level count");
    }
    // occupancy rule: every level of every dimension holds seed_n/m points
    const int per_level = seed.point_count() / m;
    for (int d = 0; d < domain.dimension(); ++d) {
        std::vector<int> counts(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < seed.point_count(); ++i) {
            ++counts[static_cast<std::size_t>(seed.points(i, d))];
        }
        for (int c : counts) {
            if (c != per_level) {
                throw std::invalid_argument("extend_lh: seed violates the level occupancy rule");
            }
        }
    }

    Design design = seed;
    design.lh_constrained = true;
    for (int iter = 0; iter < plan.iterations; ++iter) {
        const int n_old = design.point_count();
        Design batch = random_lh(domain, rng);
        Design whole = stack(design, batch, true);
        design = anneal(whole, id, domain, cfg, dopt_cfg, rng, n_old).best;
    }
    return design;
}

std::vector<int> iteration_tags(int seed_rows, int batch_size, int total_rows) {
    std::vector<int> tags(static_cast<std::size_t>(total_rows), 0);
    for (int i = seed_rows; i < total_rows; ++i) {
        tags[static_cast<std::size_t>(i)] = 1 + (i - seed_rows) / batch_size;
    }
    return tags;
}

}  // namespace doe
