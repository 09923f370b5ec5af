#pragma once

#include <vector>

#include "doe/annealer.hpp"
#include "doe/criteria.hpp"
#include "doe/domain.hpp"
#include "doe/rng.hpp"

namespace doe {

enum class ExtendStrategy { Free, LhPreserving };

/// Batch extension plan: batch_size new points per iteration, optimized with
/// the existing points held fixed.
struct ExtensionPlan {
    int batch_size = 0;
    int iterations = 0;
    ExtendStrategy strategy = ExtendStrategy::Free;
};

/// Adds plan.iterations batches of freely placed points. Each batch starts on
/// random unoccupied cells and is annealed (seed and earlier batches frozen)
/// minimizing the criterion over the whole design. The result is always
/// duplicate-free.
Design extend_free(const Design& seed, const DomainSpec& domain, const ExtensionPlan& plan,
                   CriterionId id, const SAConfig& cfg, const DoptConfig& dopt_cfg, Rng& rng);

/// LH-preserving extension on a square domain whose level count equals
/// plan.batch_size. Each batch is a fresh LH sample, annealed with coordinate
/// swaps confined to the new rows, so after iteration j every level of every
/// dimension holds exactly j+1 points (given a seed satisfying the occupancy
/// rule).
Design extend_lh(const Design& seed, const DomainSpec& domain, const ExtensionPlan& plan,
                 CriterionId id, const SAConfig& cfg, const DoptConfig& dopt_cfg, Rng& rng);

/// Iteration tag per row of an extended design: seed rows get 0, the first
/// added batch 1, and so on.
std::vector<int> iteration_tags(int seed_rows, int batch_size, int total_rows);

}  // namespace doe
