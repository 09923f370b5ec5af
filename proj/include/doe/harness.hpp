#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "doe/annealer.hpp"
#include "doe/criteria.hpp"
#include "doe/domain.hpp"
#include "doe/rng.hpp"

namespace doe {

enum class StudyId { Tournament, Projection, Sequential, SaAnalytical, SaTruss, Landscape };
enum class Restriction { Free, Lh, MixedLh };

std::string_view to_string(StudyId id);
std::optional<StudyId> parse_study(std::string_view name);
std::string_view to_string(Restriction r);
std::optional<Restriction> parse_restriction(std::string_view name);

/// Full description of one study run. Serializes to the flat JSON document
/// used both as config file and as the run manifest; re-running a manifest
/// reproduces every output byte for byte.
struct ExperimentConfig {
    StudyId study = StudyId::Tournament;
    std::vector<CriterionId> criteria;  // empty = all eight
    std::vector<int> sizes = {7, 10, 13};
    std::vector<Restriction> restrictions = {Restriction::Free, Restriction::Lh};
    int replicates = 20;
    SAConfig sa;
    DoptConfig dopt;
    std::uint64_t seed = 2013;
    std::string out_dir = "out";
    bool paper_scale = false;
    std::int64_t mc_samples = 1'000'000;
    int sequential_iterations = 3;
    bool include_sequential = false;
    std::vector<std::string> truss_models = {"ten_bar", "twenty_five_bar"};
    int threads = 0;  // 0 = hardware concurrency
    int landscape_grid = 21;

    ExperimentConfig() { sa.n_max = 100'000; dopt.bayes_terms = 1; }

    std::vector<CriterionId> effective_criteria() const;

    /// Restores the original study budgets (evaluations, replicates,
    /// Monte-Carlo samples) in place of the desk-scale defaults.
    void apply_paper_scale();

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
};

/// 2-D study grid: the first variable always has 10 levels, the second as
/// many levels as design points.
DomainSpec tournament_domain(int n_points);

/// Start design under the given restriction; lh falls back to the rounded
/// mixed form on non-square grids.
Design generate_start(const DomainSpec& domain, int n, Restriction restriction, Rng& rng);

/// Stream id for one optimization replicate; study-independent so different
/// studies regenerate identical designs from the same master seed.
std::uint64_t replicate_stream(int size, Restriction restriction, CriterionId id, int replicate);

void run_tournament(const ExperimentConfig& cfg);
void run_projection(const ExperimentConfig& cfg);
void run_sequential_study(const ExperimentConfig& cfg);
void run_sensitivity_analytical(const ExperimentConfig& cfg);
void run_sensitivity_truss(const ExperimentConfig& cfg);
void run_landscape(const ExperimentConfig& cfg);

/// Writes the manifest and dispatches on cfg.study.
void run_study(const ExperimentConfig& cfg);

/// Deterministic worker pool: fn(i) for i in [0, count), any thread order.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace doe
