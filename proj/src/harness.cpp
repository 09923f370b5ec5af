#include "doe/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "doe/io.hpp"
#include "doe/models/analytical.hpp"
#include "doe/models/truss.hpp"
#include "doe/sampling.hpp"
#include "doe/sensitivity.hpp"
#include "doe/sequential.hpp"
#include "doe/stats.hpp"
#include "doe/svg.hpp"

namespace doe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

namespace fs = std::filesystem;

int effective_threads(const ExperimentConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string size_label(int n) { return std::to_string(n); }

}  // namespace

std::string_view to_string(StudyId id) {
    switch (id) {
        case StudyId::Tournament: return "tournament";
        case StudyId::Projection: return "projection";
        case StudyId::Sequential: return "sequential";
        case StudyId::SaAnalytical: return "sa-analytical";
        case StudyId::SaTruss: return "sa-truss";
        case StudyId::Landscape: return "landscape";
    }
    return "?";
}

std::optional<StudyId> parse_study(std::string_view name) {
    for (StudyId id : {StudyId::Tournament, StudyId::Projection, StudyId::Sequential,
                       StudyId::SaAnalytical, StudyId::SaTruss, StudyId::Landscape}) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

std::string_view to_string(Restriction r) {
    switch (r) {
        case Restriction::Free: return "free";
        case Restriction::Lh: return "lh";
        case Restriction::MixedLh: return "mixed";
    }
    return "?";
}

std::optional<Restriction> parse_restriction(std::string_view name) {
    for (Restriction r : {Restriction::Free, Restriction::Lh, Restriction::MixedLh}) {
        if (name == to_string(r)) return r;
    }
    return std::nullopt;
}

std::vector<CriterionId> ExperimentConfig::effective_criteria() const {
    if (!criteria.empty()) return criteria;
    return {all_criteria().begin(), all_criteria().end()};
}

void ExperimentConfig::apply_paper_scale() {
    paper_scale = true;
    mc_samples = 20'000'000;
    if (study == StudyId::SaTruss) {
        replicates = 20;
        sa.n_max = 10'000'000;
    } else {
        replicates = 100;
        sa.n_max = 1'000'000;
    }
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["study"] = std::string(to_string(study));
    nlohmann::json crits = nlohmann::json::array();
    for (CriterionId c : effective_criteria()) crits.push_back(std::string(to_string(c)));
    j["criteria"] = crits;
    j["sizes"] = sizes;
    nlohmann::json restr = nlohmann::json::array();
    for (Restriction r : restrictions) restr.push_back(std::string(to_string(r)));
    j["restrictions"] = restr;
    j["replicates"] = replicates;
    j["t_max"] = sa.t_max;
    j["t_final"] = sa.t_final;
    j["n_reductions"] = sa.n_reductions;
    j["n_max"] = sa.n_max;
    j["stage_length"] = sa.stage_length;
    j["accepted_quota"] = sa.accepted_quota;
    if (dopt.base_degree) {
        j["dopt_base_degree"] = *dopt.base_degree;
    } else {
        j["dopt_base_degree"] = nullptr;
    }
    j["dopt_bayes_terms"] = dopt.bayes_terms;
    j["dopt_tau"] = dopt.tau;
    j["seed"] = seed;
    j["out_dir"] = out_dir;
    j["paper_scale"] = paper_scale;
    j["mc_samples"] = mc_samples;
    j["sequential_iterations"] = sequential_iterations;
    j["include_sequential"] = include_sequential;
    j["truss_models"] = truss_models;
    j["threads"] = threads;
    j["landscape_grid"] = landscape_grid;
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    if (j.contains("study")) {
        const auto id = parse_study(j.at("study").get<std::string>());
        if (!id) throw std::invalid_argument("config: unknown study " + j.at("study").dump());
        cfg.study = *id;
    }
    if (j.contains("criteria")) {
        cfg.criteria.clear();
        for (const auto& name : j.at("criteria")) {
            const auto c = parse_criterion(name.get<std::string>());
            if (!c) throw std::invalid_argument("config: unknown criterion " + name.dump());
            cfg.criteria.push_back(*c);
        }
    }
    if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<int>>();
    if (j.contains("restrictions")) {
        cfg.restrictions.clear();
        for (const auto& name : j.at("restrictions")) {
            const auto r = parse_restriction(name.get<std::string>());
            if (!r) throw std::invalid_argument("config: unknown restriction " + name.dump());
            cfg.restrictions.push_back(*r);
        }
    }
    if (j.contains("replicates")) cfg.replicates = j.at("replicates").get<int>();
    if (j.contains("t_max")) cfg.sa.t_max = j.at("t_max").get<double>();
    if (j.contains("t_final")) cfg.sa.t_final = j.at("t_final").get<double>();
    if (j.contains("n_reductions")) cfg.sa.n_reductions = j.at("n_reductions").get<int>();
    if (j.contains("n_max")) cfg.sa.n_max = j.at("n_max").get<std::int64_t>();
    if (j.contains("stage_length")) cfg.sa.stage_length = j.at("stage_length").get<std::int64_t>();
    if (j.contains("accepted_quota")) {
        cfg.sa.accepted_quota = j.at("accepted_quota").get<std::int64_t>();
    }
    if (j.contains("dopt_base_degree") && !j.at("dopt_base_degree").is_null()) {
        cfg.dopt.base_degree = j.at("dopt_base_degree").get<int>();
    }
    if (j.contains("dopt_bayes_terms")) cfg.dopt.bayes_terms = j.at("dopt_bayes_terms").get<int>();
    if (j.contains("dopt_tau")) cfg.dopt.tau = j.at("dopt_tau").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("paper_scale")) cfg.paper_scale = j.at("paper_scale").get<bool>();
    if (j.contains("mc_samples")) cfg.mc_samples = j.at("mc_samples").get<std::int64_t>();
    if (j.contains("sequential_iterations")) {
        cfg.sequential_iterations = j.at("sequential_iterations").get<int>();
    }
    if (j.contains("include_sequential")) {
        cfg.include_sequential = j.at("include_sequential").get<bool>();
    }
    if (j.contains("truss_models")) {
        cfg.truss_models = j.at("truss_models").get<std::vector<std::string>>();
    }
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("landscape_grid")) cfg.landscape_grid = j.at("landscape_grid").get<int>();
    return cfg;
}

DomainSpec tournament_domain(int n_points) {
    DomainSpec domain;
    domain.levels = {10, n_points};
    return domain;
}

Design generate_start(const DomainSpec& domain, int n, Restriction restriction, Rng& rng) {
    if (restriction == Restriction::Free) return random_free(domain, n, rng);
    const bool square = std::all_of(domain.levels.begin(), domain.levels.end(),
                                    [&](int m) { return m == n; });
    return square ? random_lh(domain, rng) : mixed_lh(domain, n, rng);
}

std::uint64_t replicate_stream(int size, Restriction restriction, CriterionId id, int replicate) {
    const auto r = static_cast<std::uint64_t>(restriction);
    const auto c = static_cast<std::uint64_t>(id);
    return (((static_cast<std::uint64_t>(size) * 4 + r) * 16 + c) << 16) +
           static_cast<std::uint64_t>(replicate) + 1;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

double safe_evaluate(CriterionId id, const Design& design, const DomainSpec& domain,
                     const DoptConfig& dopt) {
    try {
        return evaluate(id, design, domain, dopt);
    } catch (const std::exception&) {
        return kInf;
    }
}

struct ReplicateDesign {
    Design best;
    double value = 0.0;
};

/// One optimization replicate; the stream depends only on (size, restriction,
/// criterion, replicate) so every study regenerates the same designs.
ReplicateDesign optimize_one(const DomainSpec& domain, int n, Restriction restriction,
                             CriterionId id, const ExperimentConfig& cfg, int replicate) {
    Rng rng(cfg.seed, replicate_stream(n, restriction, id, replicate));
    const Design start = generate_start(domain, n, restriction, rng);
    OptResult res = anneal(start, id, domain, cfg.sa, cfg.dopt, rng);
    return {std::move(res.best), res.best_value};
}

std::vector<double> finite_values(const std::vector<double>& values) {
    std::vector<double> out;
    for (double v : values) {
        if (std::isfinite(v)) out.push_back(v);
    }
    return out;
}

std::vector<std::string> stats_cells(const BoxplotStats& s) {
    return {format_double(s.min), format_double(s.q1), format_double(s.median),
            format_double(s.q3), format_double(s.max), std::to_string(s.count)};
}

}  // namespace

void run_tournament(const ExperimentConfig& cfg) {
    const auto criteria = cfg.effective_criteria();
    if (criteria.size() < 2) throw std::invalid_argument("tournament: need at least two criteria");
    const fs::path out(cfg.out_dir);
    CsvWriter replicates_csv(out / "replicates.csv");
    replicates_csv.row({"size", "restriction", "optimizer", "replicate", "evaluator", "value"});
    CsvWriter designs_csv(out / "designs.csv");
    designs_csv.row({"size", "restriction", "optimizer", "replicate", "point", "x0", "x1"});
    CsvWriter stats_csv(out / "stats.csv");
    stats_csv.row({"size", "restriction", "optimizer", "evaluator", "min", "q1", "median", "q3",
                   "max", "count"});

    for (int size : cfg.sizes) {
        const DomainSpec domain = tournament_domain(size);
        for (Restriction restriction : cfg.restrictions) {
            // values[optimizer][evaluator][replicate]
            std::vector<std::vector<std::vector<double>>> values(
                criteria.size(), std::vector<std::vector<double>>(
                                     criteria.size(), std::vector<double>(cfg.replicates)));
            std::vector<std::vector<Design>> designs(criteria.size(),
                                                     std::vector<Design>(cfg.replicates));
            for (std::size_t o = 0; o < criteria.size(); ++o) {
                parallel_for(cfg.replicates, effective_threads(cfg), [&](int rep) {
                    auto result = optimize_one(domain, size, restriction, criteria[o], cfg, rep);
                    for (std::size_t e = 0; e < criteria.size(); ++e) {
                        values[o][e][static_cast<std::size_t>(rep)] =
                            safe_evaluate(criteria[e], result.best, domain, cfg.dopt);
                    }
                    designs[o][static_cast<std::size_t>(rep)] = std::move(result.best);
                });
            }

            for (std::size_t o = 0; o < criteria.size(); ++o) {
                for (int rep = 0; rep < cfg.replicates; ++rep) {
                    for (std::size_t e = 0; e < criteria.size(); ++e) {
                        replicates_csv.row({size_label(size), std::string(to_string(restriction)),
                                            std::string(to_string(criteria[o])),
                                            std::to_string(rep),
                                            std::string(to_string(criteria[e])),
                                            format_double(values[o][e][static_cast<std::size_t>(rep)])});
                    }
                    const Design& d = designs[o][static_cast<std::size_t>(rep)];
                    for (int p = 0; p < d.point_count(); ++p) {
                        designs_csv.row({size_label(size), std::string(to_string(restriction)),
                                         std::string(to_string(criteria[o])), std::to_string(rep),
                                         std::to_string(p), std::to_string(d.points(p, 0)),
                                         std::to_string(d.points(p, 1))});
                    }
                }
            }

            // five-number summaries plus the two figure arrangements
            std::vector<BoxPanel> by_evaluator(criteria.size());
            std::vector<BoxPanel> by_optimizer(criteria.size());
            std::vector<double> eval_lo(criteria.size(), kInf);
            std::vector<double> eval_hi(criteria.size(), -kInf);
            for (std::size_t e = 0; e < criteria.size(); ++e) {
                for (std::size_t o = 0; o < criteria.size(); ++o) {
                    for (double v : finite_values(values[o][e])) {
                        eval_lo[e] = std::min(eval_lo[e], v);
                        eval_hi[e] = std::max(eval_hi[e], v);
                    }
                }
            }
            for (std::size_t a = 0; a < criteria.size(); ++a) {
                by_evaluator[a].title = "evaluated by " + std::string(to_string(criteria[a]));
                by_optimizer[a].title = "optimized for " + std::string(to_string(criteria[a]));
            }
            for (std::size_t o = 0; o < criteria.size(); ++o) {
                for (std::size_t e = 0; e < criteria.size(); ++e) {
                    const auto finite = finite_values(values[o][e]);
                    if (!finite.empty()) {
                        const BoxplotStats s = boxplot_stats(finite);
                        stats_csv.row({size_label(size), std::string(to_string(restriction)),
                                       std::string(to_string(criteria[o])),
                                       std::string(to_string(criteria[e])), stats_cells(s)[0],
                                       stats_cells(s)[1], stats_cells(s)[2], stats_cells(s)[3],
                                       stats_cells(s)[4], stats_cells(s)[5]});
                        by_evaluator[e].labels.push_back(std::string(to_string(criteria[o])));
                        by_evaluator[e].boxes.push_back(s);
                        // normalized to the evaluator's global range so panels mix scales
                        BoxplotStats ns = s;
                        const double span = (eval_hi[e] > eval_lo[e]) ? eval_hi[e] - eval_lo[e] : 1.0;
                        ns.min = (s.min - eval_lo[e]) / span;
                        ns.q1 = (s.q1 - eval_lo[e]) / span;
                        ns.median = (s.median - eval_lo[e]) / span;
                        ns.q3 = (s.q3 - eval_lo[e]) / span;
                        ns.max = (s.max - eval_lo[e]) / span;
                        by_optimizer[o].labels.push_back(std::string(to_string(criteria[e])));
                        by_optimizer[o].boxes.push_back(ns);
                    }
                }
            }
            const std::string tag = size_label(size) + "_" + std::string(to_string(restriction));
            write_text_file(out / ("boxplots_by_evaluator_" + tag + ".svg"),
                            svg_boxplot_grid(by_evaluator, 4, "cross-evaluation, " + tag));
            write_text_file(out / ("boxplots_by_optimizer_" + tag + ".svg"),
                            svg_boxplot_grid(by_optimizer, 4,
                                             "cross-evaluation (normalized), " + tag, true));
        }
    }
}

void run_projection(const ExperimentConfig& cfg) {
    const auto criteria = cfg.effective_criteria();
    const fs::path out(cfg.out_dir);
    CsvWriter redundant_csv(out / "redundant.csv");
    redundant_csv.row({"size", "restriction", "criterion", "replicate", "redundant"});
    CsvWriter hist_csv(out / "histogram.csv");
    hist_csv.row({"size", "restriction", "criterion", "redundant", "count"});
    CsvWriter means_csv(out / "means.csv");
    means_csv.row({"size", "restriction", "criterion", "mean"});

    for (int size : cfg.sizes) {
        const DomainSpec domain = tournament_domain(size);
        for (Restriction restriction : cfg.restrictions) {
            std::vector<HistPanel> panels;
            for (CriterionId id : criteria) {
                std::vector<int> redundant(static_cast<std::size_t>(cfg.replicates));
                parallel_for(cfg.replicates, effective_threads(cfg), [&](int rep) {
                    auto result = optimize_one(domain, size, restriction, id, cfg, rep);
                    // keep the always-10-level dimension, drop the other
                    redundant[static_cast<std::size_t>(rep)] =
                        redundant_count(project(result.best, {0}));
                });
                std::vector<int> counts(static_cast<std::size_t>(size) + 1, 0);
                double mean = 0.0;
                for (int rep = 0; rep < cfg.replicates; ++rep) {
                    const int r = redundant[static_cast<std::size_t>(rep)];
                    redundant_csv.row({size_label(size), std::string(to_string(restriction)),
                                       std::string(to_string(id)), std::to_string(rep),
                                       std::to_string(r)});
                    ++counts[static_cast<std::size_t>(r)];
                    mean += r;
                }
                mean /= cfg.replicates;
                for (std::size_t r = 0; r < counts.size(); ++r) {
                    hist_csv.row({size_label(size), std::string(to_string(restriction)),
                                  std::string(to_string(id)), std::to_string(r),
                                  std::to_string(counts[r])});
                }
                means_csv.row({size_label(size), std::string(to_string(restriction)),
                               std::string(to_string(id)), format_double(mean)});
                panels.push_back({std::string(to_string(id)), counts});
            }
            const std::string tag = size_label(size) + "_" + std::string(to_string(restriction));
            write_text_file(out / ("histograms_" + tag + ".svg"),
                            svg_histogram_grid(panels, 4, "redundant projected points, " + tag));
        }
    }
}

void run_sequential_study(const ExperimentConfig& cfg) {
    const auto criteria = cfg.effective_criteria();
    const fs::path out(cfg.out_dir);
    CsvWriter designs_csv(out / "designs.csv");
    designs_csv.row({"criterion", "restriction", "replicate", "point", "iteration", "x0", "x1"});
    CsvWriter values_csv(out / "values.csv");
    values_csv.row({"criterion", "restriction", "replicate", "iteration", "n_points", "value"});

    const int base = 10;
    const DomainSpec domain = tournament_domain(base);
    for (Restriction restriction : cfg.restrictions) {
        for (CriterionId id : criteria) {
            std::vector<std::vector<Design>> snapshots(static_cast<std::size_t>(cfg.replicates));
            parallel_for(cfg.replicates, effective_threads(cfg), [&](int rep) {
                Rng rng(cfg.seed, replicate_stream(base, restriction, id, rep));
                const Design start = generate_start(domain, base, restriction, rng);
                Design design = anneal(start, id, domain, cfg.sa, cfg.dopt, rng).best;
                auto& snaps = snapshots[static_cast<std::size_t>(rep)];
                snaps.push_back(design);
                ExtensionPlan plan{base, 1,
                                   restriction == Restriction::Free ? ExtendStrategy::Free
                                                                    : ExtendStrategy::LhPreserving};
                for (int iter = 0; iter < cfg.sequential_iterations; ++iter) {
                    design = (plan.strategy == ExtendStrategy::Free)
                                 ? extend_free(design, domain, plan, id, cfg.sa, cfg.dopt, rng)
                                 : extend_lh(design, domain, plan, id, cfg.sa, cfg.dopt, rng);
                    snaps.push_back(design);
                }
            });
            for (int rep = 0; rep < cfg.replicates; ++rep) {
                const auto& snaps = snapshots[static_cast<std::size_t>(rep)];
                const Design& final_design = snaps.back();
                const auto tags = iteration_tags(base, base, final_design.point_count());
                for (int p = 0; p < final_design.point_count(); ++p) {
                    designs_csv.row({std::string(to_string(id)),
                                     std::string(to_string(restriction)), std::to_string(rep),
                                     std::to_string(p), std::to_string(tags[static_cast<std::size_t>(p)]),
                                     std::to_string(final_design.points(p, 0)),
                                     std::to_string(final_design.points(p, 1))});
                }
                for (std::size_t iter = 0; iter < snaps.size(); ++iter) {
                    values_csv.row({std::string(to_string(id)),
                                    std::string(to_string(restriction)), std::to_string(rep),
                                    std::to_string(iter),
                                    std::to_string(snaps[iter].point_count()),
                                    format_double(safe_evaluate(id, snaps[iter], domain, cfg.dopt))});
                }
            }
        }
    }
}

namespace {

struct ErrorTableWriter {
    CsvWriter csv;
    explicit ErrorTableWriter(const fs::path& path) : csv(path) {
        csv.row({"restriction", "mode", "size", "criterion", "replicate", "model", "epsilon"});
    }
};

std::pair<double, double> mean_and_max(const std::vector<double>& eps) {
    double mean = 0.0;
    double worst = 0.0;
    for (double e : eps) {
        mean += e;
        worst = std::max(worst, e);
    }
    return {mean / static_cast<double>(eps.size()), worst};
}

void write_summary_rows(CsvWriter& summary, const std::string& restriction,
                        const std::string& mode, const std::string& size,
                        const std::string& criterion, const std::vector<double>& eps) {
    const auto [mean, worst] = mean_and_max(eps);
    summary.row({restriction, mode, size, criterion, format_double(100.0 * mean),
                 format_double(100.0 * worst)});
}

void write_summary_rows_truss(CsvWriter& summary, const std::string& model, int n,
                              CriterionId id, const std::string& response,
                              const std::vector<double>& eps) {
    const auto [mean, worst] = mean_and_max(eps);
    summary.row({model, std::to_string(n), std::string(to_string(id)), response,
                 format_double(100.0 * mean), format_double(100.0 * worst)});
}

}  // namespace

void run_sensitivity_analytical(const ExperimentConfig& cfg) {
    const auto criteria = cfg.effective_criteria();
    const auto& suite = analytical_suite();
    const fs::path out(cfg.out_dir);
    ErrorTableWriter errors(out / "errors.csv");
    CsvWriter summary(out / "summary.csv");
    summary.row({"restriction", "mode", "size", "criterion", "mean_x100", "max_x100"});

    // full-design reference correlations per (size, model)
    std::map<int, std::vector<Eigen::VectorXd>> references;
    std::map<int, DomainSpec> domains;
    std::set<int> all_sizes(cfg.sizes.begin(), cfg.sizes.end());
    if (cfg.include_sequential) all_sizes.insert(10);
    for (int size : all_sizes) {
        DomainSpec domain = analytical_domain({10, size});
        std::vector<Eigen::VectorXd> refs;
        for (const auto& model : suite) {
            refs.push_back(full_design_reference(domain, as_grid_model(model)).col(0));
        }
        references[size] = std::move(refs);
        domains[size] = std::move(domain);
    }

    auto design_errors = [&](const Design& design, int size) {
        const DomainSpec& domain = domains[size];
        const Eigen::MatrixXd inputs = design.points.cast<double>();
        std::vector<double> eps;
        for (std::size_t m = 0; m < suite.size(); ++m) {
            Eigen::VectorXd z(design.point_count());
            for (int i = 0; i < design.point_count(); ++i) {
                z(i) = suite[m].f(domain.value_at(0, design.points(i, 0)),
                                  domain.value_at(1, design.points(i, 1)));
            }
            const Eigen::VectorXd rho = param_response_srcc(inputs, z);
            eps.push_back(correlation_error(rho, references[size][m]));
        }
        return eps;
    };

    for (Restriction restriction : cfg.restrictions) {
        // one-shot designs at each domain size
        for (int size : cfg.sizes) {
            const DomainSpec& domain = domains[size];
            std::vector<BoxPanel> panels;
            for (CriterionId id : criteria) {
                std::vector<std::vector<double>> eps(static_cast<std::size_t>(cfg.replicates));
                parallel_for(cfg.replicates, effective_threads(cfg), [&](int rep) {
                    auto result = optimize_one(domain, size, restriction, id, cfg, rep);
                    eps[static_cast<std::size_t>(rep)] = design_errors(result.best, size);
                });
                std::vector<double> all;
                std::vector<std::vector<double>> per_model(suite.size());
                for (int rep = 0; rep < cfg.replicates; ++rep) {
                    for (std::size_t m = 0; m < suite.size(); ++m) {
                        const double e = eps[static_cast<std::size_t>(rep)][m];
                        errors.csv.row({std::string(to_string(restriction)), "oneshot",
                                        size_label(size), std::string(to_string(id)),
                                        std::to_string(rep), suite[m].name, format_double(e)});
                        all.push_back(e);
                        per_model[m].push_back(e);
                    }
                }
                write_summary_rows(summary, std::string(to_string(restriction)), "oneshot",
                                   size_label(size), std::string(to_string(id)), all);
                BoxPanel panel;
                panel.title = std::string(to_string(id));
                for (std::size_t m = 0; m < suite.size(); ++m) {
                    panel.labels.push_back(std::to_string(m + 1));
                    panel.boxes.push_back(boxplot_stats(per_model[m]));
                }
                panels.push_back(std::move(panel));
            }
            const std::string tag =
                size_label(size) + "_" + std::string(to_string(restriction));
            write_text_file(out / ("boxplots_" + tag + ".svg"),
                            svg_boxplot_grid(panels, 4, "correlation errors, " + tag, true));
        }

        // sequential extensions on the square 10x10 domain
        if (cfg.include_sequential) {
            const int base = 10;
            const DomainSpec& domain = domains[base];
            for (CriterionId id : criteria) {
                const int steps = cfg.sequential_iterations + 1;
                std::vector<std::vector<std::vector<double>>> eps(
                    static_cast<std::size_t>(cfg.replicates),
                    std::vector<std::vector<double>>(static_cast<std::size_t>(steps)));
                parallel_for(cfg.replicates, effective_threads(cfg), [&](int rep) {
                    Rng rng(cfg.seed, replicate_stream(base, restriction, id, rep));
                    const Design start = generate_start(domain, base, restriction, rng);
                    Design design = anneal(start, id, domain, cfg.sa, cfg.dopt, rng).best;
                    auto& slots = eps[static_cast<std::size_t>(rep)];
                    slots[0] = design_errors(design, base);
                    ExtensionPlan plan{base, 1,
                                       restriction == Restriction::Free
                                           ? ExtendStrategy::Free
                                           : ExtendStrategy::LhPreserving};
                    for (int iter = 1; iter < steps; ++iter) {
                        design = (plan.strategy == ExtendStrategy::Free)
                                     ? extend_free(design, domain, plan, id, cfg.sa, cfg.dopt, rng)
                                     : extend_lh(design, domain, plan, id, cfg.sa, cfg.dopt, rng);
                        slots[static_cast<std::size_t>(iter)] = design_errors(design, base);
                    }
                });
                for (int iter = 0; iter < steps; ++iter) {
                    const int n_points = base * (iter + 1);
                    std::vector<double> all;
                    for (int rep = 0; rep < cfg.replicates; ++rep) {
                        for (std::size_t m = 0; m < suite.size(); ++m) {
                            const double e = eps[static_cast<std::size_t>(rep)]
                                                [static_cast<std::size_t>(iter)][m];
                            errors.csv.row({std::string(to_string(restriction)), "sequential",
                                            size_label(n_points), std::string(to_string(id)),
                                            std::to_string(rep), suite[m].name, format_double(e)});
                            all.push_back(e);
                        }
                    }
                    write_summary_rows(summary, std::string(to_string(restriction)), "sequential",
                                       size_label(n_points), std::string(to_string(id)), all);
                }
            }
        }
    }
}

void run_sensitivity_truss(const ExperimentConfig& cfg) {
    const auto criteria = cfg.effective_criteria();
    const fs::path out(cfg.out_dir);
    CsvWriter errors_csv(out / "errors.csv");
    errors_csv.row({"model", "n", "criterion", "replicate", "response", "epsilon"});
    CsvWriter summary(out / "summary.csv");
    summary.row({"model", "n", "criterion", "response", "mean_x100", "max_x100"});
    const std::array<std::string, 3> response_names = {"w", "d", "s"};

    for (const std::string& model_name : cfg.truss_models) {
        TrussModel model;
        if (model_name == "ten_bar") {
            model = ten_bar();
        } else if (model_name == "twenty_five_bar") {
            model = twenty_five_bar();
        } else {
            throw std::invalid_argument("sa-truss: unknown model " + model_name);
        }
        const DomainSpec domain = model.domain();
        const GridModel grid_model = as_grid_model(model);
        const int base = static_cast<int>(model.area_levels.size());

        // Monte-Carlo reference, shared by every criterion in this run
        const std::uint64_t mc_stream =
            (std::uint64_t{1} << 62) + (model_name == "ten_bar" ? 0 : 1);
        const Eigen::MatrixXd reference = monte_carlo_reference(
            domain, grid_model, cfg.mc_samples, RngSeed{cfg.seed, mc_stream},
            effective_threads(cfg));
        nlohmann::json ref_json;
        ref_json["model"] = model_name;
        ref_json["mc_samples"] = cfg.mc_samples;
        {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < reference.rows(); ++i) {
                rows.push_back(std::vector<double>(reference.row(i).begin(),
                                                   reference.row(i).end()));
            }
            ref_json["correlations"] = rows;
        }
        write_text_file(out / ("reference_" + model_name + ".json"), ref_json.dump(2) + "\n");
        write_text_file(out / (model_name + ".json"), truss_to_json(model).dump(2) + "\n");

        auto design_epsilon = [&](const Design& design) {
            const Eigen::MatrixXd inputs = design.points.cast<double>();
            Eigen::MatrixXd responses(design.point_count(), 3);
            for (int i = 0; i < design.point_count(); ++i) {
                Eigen::VectorXd areas(domain.dimension());
                for (int d = 0; d < domain.dimension(); ++d) {
                    areas(d) = domain.value_at(d, design.points(i, d));
                }
                responses.row(i) = grid_model(areas);
            }
            const Eigen::MatrixXd rho = param_response_srcc(inputs, responses);
            Eigen::VectorXd eps(3);
            for (int r = 0; r < 3; ++r) {
                eps(r) = correlation_error(rho.col(r), reference.col(r));
            }
            return eps;
        };

        std::map<int, std::vector<BoxPanel>> panels;  // keyed by design size
        for (CriterionId id : criteria) {
            std::vector<Eigen::VectorXd> eps_base(static_cast<std::size_t>(cfg.replicates));
            std::vector<Eigen::VectorXd> eps_double(static_cast<std::size_t>(cfg.replicates));
            parallel_for(cfg.replicates, effective_threads(cfg), [&](int rep) {
                Rng rng(cfg.seed, replicate_stream(base, Restriction::Lh, id, rep));
                const Design start = random_lh(domain, rng);
                Design design = anneal(start, id, domain, cfg.sa, cfg.dopt, rng).best;
                eps_base[static_cast<std::size_t>(rep)] = design_epsilon(design);
                ExtensionPlan plan{base, 1, ExtendStrategy::LhPreserving};
                design = extend_lh(design, domain, plan, id, cfg.sa, cfg.dopt, rng);
                eps_double[static_cast<std::size_t>(rep)] = design_epsilon(design);
            });
            for (const auto& [size_n, eps_all] :
                 {std::pair{base, &eps_base}, std::pair{2 * base, &eps_double}}) {
                std::vector<double> overall;
                BoxPanel panel;
                panel.title = std::string(to_string(id));
                for (int r = 0; r < 3; ++r) {
                    std::vector<double> eps_r;
                    for (int rep = 0; rep < cfg.replicates; ++rep) {
                        const double e = (*eps_all)[static_cast<std::size_t>(rep)](r);
                        errors_csv.row({model_name, std::to_string(size_n),
                                        std::string(to_string(id)), std::to_string(rep),
                                        response_names[static_cast<std::size_t>(r)],
                                        format_double(e)});
                        eps_r.push_back(e);
                        overall.push_back(e);
                    }
                    write_summary_rows_truss(summary, model_name, size_n, id,
                                             response_names[static_cast<std::size_t>(r)], eps_r);
                    panel.labels.push_back(response_names[static_cast<std::size_t>(r)]);
                    panel.boxes.push_back(boxplot_stats(eps_r));
                }
                write_summary_rows_truss(summary, model_name, size_n, id, "overall", overall);
                panels[size_n].push_back(std::move(panel));
            }
        }
        for (const auto& [size_n, size_panels] : panels) {
            write_text_file(out / ("boxplots_" + model_name + "_" + std::to_string(size_n) + ".svg"),
                            svg_boxplot_grid(size_panels, 4,
                                             "correlation errors, " + model_name + " n=" +
                                                 std::to_string(size_n),
                                             true));
        }
    }
}

void run_landscape(const ExperimentConfig& cfg) {
    const auto criteria = cfg.effective_criteria();
    const fs::path out(cfg.out_dir);
    const int g = cfg.landscape_grid;
    DomainSpec domain;
    domain.levels = {g, g};

    Design three_corners;
    three_corners.points.resize(3, 2);
    three_corners.points << 0, 0, g - 1, 0, 0, g - 1;
    Design four_corners;
    four_corners.points.resize(4, 2);
    four_corners.points << 0, 0, g - 1, 0, 0, g - 1, g - 1, g - 1;

    auto emit = [&](const std::string& name, CriterionId id, const Design& fixed,
                    const DoptConfig& dopt) {
        const Eigen::MatrixXd scan = landscape_scan(id, fixed, domain, dopt);
        write_scan_csv(out / (name + ".csv"), scan);
        write_text_file(out / (name + ".svg"), svg_heatmap(scan, name));
    };

    for (CriterionId id : criteria) {
        emit("scan4_" + std::string(to_string(id)), id, three_corners, cfg.dopt);
        emit("scan5_" + std::string(to_string(id)), id, four_corners, cfg.dopt);
    }
    // the two D-optimality basis structures of interest
    DoptConfig plain;
    plain.bayes_terms = 0;
    DoptConfig bayes;
    bayes.bayes_terms = 1;
    bayes.tau = 1.0;
    emit("scan5_Dopt_linear", CriterionId::Dopt, four_corners, plain);
    emit("scan5_Dopt_bayes1", CriterionId::Dopt, four_corners, bayes);
}

void run_study(const ExperimentConfig& cfg) {
    fs::create_directories(cfg.out_dir);
    write_text_file(fs::path(cfg.out_dir) / "manifest.json", cfg.to_json().dump(2) + "\n");
    switch (cfg.study) {
        case StudyId::Tournament: run_tournament(cfg); return;
        case StudyId::Projection: run_projection(cfg); return;
        case StudyId::Sequential: run_sequential_study(cfg); return;
        case StudyId::SaAnalytical: run_sensitivity_analytical(cfg); return;
        case StudyId::SaTruss: run_sensitivity_truss(cfg); return;
        case StudyId::Landscape: run_landscape(cfg); return;
    }
    throw std::invalid_argument("run_study: unknown study");
}

}  // namespace doe
