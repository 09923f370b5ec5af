#include "doe/annealer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace doe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double SAConfig::t_mult() const { return std::pow(t_max / t_final, 1.0 / n_reductions); }

void SAConfig::validate() const {
    if (!(t_max > t_final && t_final > 0.0)) {
        throw std::invalid_argument("SAConfig: need t_max > t_final > 0");
    }
    if (n_reductions < 1) throw std::invalid_argument("SAConfig: n_reductions must be >= 1");
    if (n_max < n_reductions) throw std::invalid_argument("SAConfig: n_max must be >= n_reductions");
}

bool metropolis_accept(double f_old, double f_new, double t, double u) {
    if (t <= 0.0) throw std::invalid_argument("metropolis_accept: temperature must be positive");
    return std::exp((f_old - f_new) / t) >= u;
}

Design propose_free_move(const Design& design, const DomainSpec& domain, int move_row, Rng& rng) {
    const std::uint64_t cells = domain.total_cells();
    const int n = design.point_count();
    if (static_cast<std::uint64_t>(n) >= cells) {
        throw std::invalid_argument("propose_free_move: no unoccupied cell");
    }
    std::unordered_set<std::uint64_t> occupied;
    occupied.reserve(static_cast<std::size_t>(n) * 2);
    for (int i = 0; i < n; ++i) {
        occupied.insert(cell_id(design.points.row(i), domain));
    }
    std::uint64_t target;
    do {
        target = rng.index(cells);
    } while (occupied.count(target));

    Design next = design;
    next.points.row(move_row) = cell_coords(target, domain);
    return next;
}

Design propose_lh_swap(const Design& design, int first_swappable_row, Rng& rng) {
    const int n = design.point_count();
    const int movable = n - first_swappable_row;
    if (!design.lh_constrained) {
        throw std::invalid_argument("propose_lh_swap: design is not LH-constrained");
    }
    if (movable < 2) throw std::invalid_argument("propose_lh_swap: need two swappable rows");
    const int a = first_swappable_row + static_cast<int>(rng.index(static_cast<std::uint64_t>(movable)));
    int b = first_swappable_row + static_cast<int>(rng.index(static_cast<std::uint64_t>(movable - 1)));
    if (b >= a) ++b;
    const int dim = static_cast<int>(rng.index(static_cast<std::uint64_t>(design.dimension())));

    Design next = design;
    std::swap(next.points(a, dim), next.points(b, dim));
    return next;
}

OptResult anneal(const Design& start, CriterionId id, const DomainSpec& domain,
                 const SAConfig& cfg, const DoptConfig& dopt_cfg, Rng& rng, int frozen_rows) {
    cfg.validate();
    validate_design(start, domain);
    const int n = start.point_count();
    const int movable = n - frozen_rows;
    if (movable < 1) throw std::invalid_argument("anneal: no movable rows");

    auto safe_eval = [&](const Design& d) {
        try {
            return evaluate(id, d, domain, dopt_cfg);
        } catch (const std::exception&) {
            return kInf;
        }
    };

    OptResult result;
    result.seed = rng.seed();

    Design current = start;
    double f_cur = safe_eval(current);
    result.evaluations = 1;
    result.best = current;
    result.best_value = f_cur;

    const bool lh_moves = start.lh_constrained;
    if (lh_moves && movable < 2) throw std::invalid_argument("anneal: LH moves need two swappable rows");
    const bool grid_full = !lh_moves && static_cast<std::uint64_t>(n) >= domain.total_cells();
    if (grid_full) {
        // nothing can move; the start design is the only reachable state
        result.history.push_back(result.best_value);
        return result;
    }

    double t = cfg.t_max;
    const double t_mult = cfg.t_mult();
    const std::int64_t stage_length = cfg.effective_stage_length();
    const std::int64_t quota = cfg.effective_quota();
    std::int64_t stage_evals = 0;
    std::int64_t stage_accepts = 0;
    std::int64_t move_step = 0;

    while (result.evaluations < cfg.n_max) {
        Design proposal = lh_moves
                              ? propose_lh_swap(current, frozen_rows, rng)
                              : propose_free_move(current, domain,
                                                  frozen_rows + static_cast<int>(move_step % movable),
                                                  rng);
        ++move_step;
        const double f_new = safe_eval(proposal);
        ++result.evaluations;
        ++stage_evals;

        if (std::isfinite(f_new) && metropolis_accept(f_cur, f_new, t, rng.unit())) {
            current = std::move(proposal);
            f_cur = f_new;
            ++stage_accepts;
            if (f_new < result.best_value) {
                result.best = current;
                result.best_value = f_new;
            }
        }

        if (stage_evals >= stage_length || stage_accepts >= quota) {
            t /= t_mult;
            result.history.push_back(result.best_value);
            stage_evals = 0;
            stage_accepts = 0;
        }
    }
    result.history.push_back(result.best_value);
    return result;
}

}  // namespace doe
