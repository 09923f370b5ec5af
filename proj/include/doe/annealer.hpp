#pragma once

#include <cstdint>
#include <vector>

#include "doe/criteria.hpp"
#include "doe/domain.hpp"
#include "doe/rng.hpp"

namespace doe {

/// Cooling schedule. The temperature starts at t_max and is divided by
/// (t_max/t_final)^(1/n_reductions) at the end of each stage; a stage ends
/// after stage_length evaluations or earlier once accepted_quota movements
/// have been accepted. The run stops after n_max objective evaluations.
struct SAConfig {
    double t_max = 1e-3;
    double t_final = 1e-6;
    int n_reductions = 100;
    std::int64_t n_max = 1'000'000;
    std::int64_t stage_length = 0;    // 0: n_max / 10
    std::int64_t accepted_quota = 0;  // 0: n_max / 100

    double t_mult() const;
    std::int64_t effective_stage_length() const { return stage_length > 0 ? stage_length : n_max / 10; }
    std::int64_t effective_quota() const { return accepted_quota > 0 ? accepted_quota : n_max / 100; }
    void validate() const;
};

struct OptResult {
    Design best;
    double best_value = 0.0;
    std::vector<double> history;  // best-so-far value at each stage end, plus the final value
    std::int64_t evaluations = 0;
    RngSeed seed;
};

/// exp((f_old - f_new)/t) >= u.
bool metropolis_accept(double f_old, double f_new, double t, double u);

/// Relocates the point in move_row to a uniformly chosen unoccupied cell.
/// Throws when the grid is full.
Design propose_free_move(const Design& design, const DomainSpec& domain, int move_row, Rng& rng);

/// Swaps one randomly chosen coordinate between two distinct rows drawn from
/// [first_swappable_row, n). Column multisets are preserved.
Design propose_lh_swap(const Design& design, int first_swappable_row, Rng& rng);

/// Simulated-annealing minimization of a criterion. The neighborhood follows
/// start.lh_constrained: coordinate swaps for LH designs, single-point
/// relocation (cycling through the movable rows) otherwise. Rows below
/// frozen_rows never change; evaluator errors are treated as rejected moves
/// but still consume evaluation budget.
OptResult anneal(const Design& start, CriterionId id, const DomainSpec& domain,
                 const SAConfig& cfg, const DoptConfig& dopt_cfg, Rng& rng, int frozen_rows = 0);

}  // namespace doe
