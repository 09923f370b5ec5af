#pragma once

#include "doe/domain.hpp"
#include "doe/rng.hpp"

namespace doe {

/// n distinct grid cells drawn uniformly without replacement.
Design random_free(const DomainSpec& domain, int n, Rng& rng);

/// Square Latin Hypercube: every dimension must have the same level count n;
/// each column is an independent uniform permutation of 0..n-1.
Design random_lh(const DomainSpec& domain, Rng& rng);

/// Rounding map used for mixed designs: LH index i of an n-level master
/// mapped into m target levels.
int mixed_round_index(int i, int master_levels, int target_levels);

/// Mixed Latin Hypercube with n points, where n must equal the level count
/// of at least one dimension (the master). An n-level LH is generated over
/// all dimensions and every dimension with a different level count is
/// rounded through mixed_round_index. Full-row duplicates trigger
/// regeneration (bounded retries).
Design mixed_lh(const DomainSpec& domain, int n, Rng& rng);

}  // namespace doe
