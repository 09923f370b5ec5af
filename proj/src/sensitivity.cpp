#include "doe/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doe/correlation.hpp"
#include "doe/transforms.hpp"

namespace doe {

Eigen::VectorXd param_response_srcc(const Eigen::MatrixXd& inputs,
                                    const Eigen::VectorXd& response) {
    if (inputs.rows() != response.size()) {
        throw std::invalid_argument("param_response_srcc: row count mismatch");
    }
    if (inputs.rows() < 3) throw std::invalid_argument("param_response_srcc: need n >= 3");
    if ((response.array() == response(0)).all()) {
        std::cerr << "param_response_srcc: constant response, correlations set to 0\n";
        return Eigen::VectorXd::Zero(inputs.cols());
    }
    Eigen::VectorXd rho(inputs.cols());
    for (int d = 0; d < inputs.cols(); ++d) {
        rho(d) = spearman(inputs.col(d), response);
    }
    return rho;
}

Eigen::MatrixXd param_response_srcc(const Eigen::MatrixXd& inputs,
                                    const Eigen::MatrixXd& responses) {
    Eigen::MatrixXd rho(inputs.cols(), responses.cols());
    for (int r = 0; r < responses.cols(); ++r) {
        rho.col(r) = param_response_srcc(inputs, Eigen::VectorXd(responses.col(r)));
    }
    return rho;
}

namespace {

using LevelMatrix = Eigen::Matrix<std::uint16_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Mid-rank of each level given the per-level occurrence counts, divided by n
/// to keep the Pearson accumulation well-conditioned for large sample counts.
std::vector<double> level_midranks(const std::vector<std::int64_t>& counts, std::int64_t n) {
    std::vector<double> mid(counts.size(), 0.0);
    std::int64_t below = 0;
    for (std::size_t l = 0; l < counts.size(); ++l) {
        mid[l] = (static_cast<double>(below) + 0.5 * static_cast<double>(counts[l] + 1)) /
                 static_cast<double>(n);
        below += counts[l];
    }
    return mid;
}

/// Spearman correlations between every level column and every response
/// column, on mid-ranks throughout (grids tie heavily by construction).
Eigen::MatrixXd rank_correlations(const LevelMatrix& levels, const Eigen::MatrixXd& responses,
                                  const std::vector<int>& level_counts) {
    const std::int64_t n = levels.rows();
    const int k = static_cast<int>(levels.cols());
    const int r = static_cast<int>(responses.cols());
    const double mean_rank = 0.5 * (static_cast<double>(n) + 1.0) / static_cast<double>(n);

    // per-parameter rank lookups
    std::vector<std::vector<double>> param_rank(static_cast<std::size_t>(k));
    std::vector<double> param_ss(static_cast<std::size_t>(k), 0.0);
    for (int d = 0; d < k; ++d) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(level_counts[static_cast<std::size_t>(d)]), 0);
        for (std::int64_t i = 0; i < n; ++i) ++counts[levels(i, d)];
        param_rank[static_cast<std::size_t>(d)] = level_midranks(counts, n);
        double ss = 0.0;
        for (std::size_t l = 0; l < counts.size(); ++l) {
            const double c = param_rank[static_cast<std::size_t>(d)][l] - mean_rank;
            ss += static_cast<double>(counts[l]) * c * c;
        }
        param_ss[static_cast<std::size_t>(d)] = ss;
    }

    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(k, r);
    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    Eigen::VectorXd z_rank(n);
    for (int rc = 0; rc < r; ++rc) {
        const auto col = responses.col(rc);
        std::iota(order.begin(), order.end(), std::int64_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::int64_t a, std::int64_t b) { return col(a) < col(b); });
        std::int64_t i = 0;
        double z_ss = 0.0;
        while (i < n) {
            std::int64_t j = i;
            while (j + 1 < n && col(order[static_cast<std::size_t>(j + 1)]) ==
                                    col(order[static_cast<std::size_t>(i)])) {
                ++j;
            }
            const double mid = (0.5 * static_cast<double>(i + j) + 1.0) / static_cast<double>(n);
            for (std::int64_t t = i; t <= j; ++t) z_rank(order[static_cast<std::size_t>(t)]) = mid;
            const double c = mid - mean_rank;
            z_ss += static_cast<double>(j - i + 1) * c * c;
            i = j + 1;
        }
        if (z_ss == 0.0) {
            std::cerr << "rank_correlations: constant response component " << rc
                      << ", correlations set to 0\n";
            continue;
        }
        for (int d = 0; d < k; ++d) {
            if (param_ss[static_cast<std::size_t>(d)] == 0.0) continue;
            const auto& pr = param_rank[static_cast<std::size_t>(d)];
            double cross = 0.0;
            for (std::int64_t s = 0; s < n; ++s) {
                cross += (pr[levels(s, d)] - mean_rank) * (z_rank(s) - mean_rank);
            }
            rho(d, rc) = cross / std::sqrt(param_ss[static_cast<std::size_t>(d)] * z_ss);
        }
    }
    return rho;
}

Eigen::VectorXd physical_point(const DomainSpec& domain, const LevelMatrix& levels,
                               std::int64_t row) {
    Eigen::VectorXd x(domain.dimension());
    for (int d = 0; d < domain.dimension(); ++d) {
        x(d) = domain.value_at(d, levels(row, d));
    }
    return x;
}

Eigen::MatrixXd evaluate_rows(const DomainSpec& domain, const GridModel& model,
                              const LevelMatrix& levels, int threads) {
    const std::int64_t n = levels.rows();
    const Eigen::VectorXd probe = model(physical_point(domain, levels, 0));
    Eigen::MatrixXd responses(n, probe.size());
    responses.row(0) = probe;

    const int workers = std::max(1, threads);
    if (workers == 1 || n < 1024) {
        for (std::int64_t i = 1; i < n; ++i) {
            responses.row(i) = model(physical_point(domain, levels, i));
        }
    } else {
        std::atomic<std::int64_t> next{1};
        auto work = [&] {
            constexpr std::int64_t kBlock = 1024;
            for (;;) {
                const std::int64_t begin = next.fetch_add(kBlock);
                if (begin >= n) break;
                const std::int64_t end = std::min(begin + kBlock, n);
                for (std::int64_t i = begin; i < end; ++i) {
                    responses.row(i) = model(physical_point(domain, levels, i));
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return responses;
}

}  // namespace

Eigen::MatrixXd full_design_reference(const DomainSpec& domain, const GridModel& model,
                                      std::uint64_t max_cells) {
    domain.validate();
    const std::uint64_t cells = domain.total_cells();
    if (cells > max_cells) {
        throw std::invalid_argument("full_design_reference: grid larger than the cell guard");
    }
    LevelMatrix levels(static_cast<Eigen::Index>(cells), domain.dimension());
    for (std::uint64_t id = 0; id < cells; ++id) {
        const Eigen::RowVectorXi coords = cell_coords(id, domain);
        for (int d = 0; d < domain.dimension(); ++d) {
            levels(static_cast<Eigen::Index>(id), d) = static_cast<std::uint16_t>(coords(d));
        }
    }
    const Eigen::MatrixXd responses = evaluate_rows(domain, model, levels, 1);
    return rank_correlations(levels, responses, domain.levels);
}

Eigen::MatrixXd monte_carlo_reference(const DomainSpec& domain, const GridModel& model,
                                      std::int64_t sample_count, RngSeed seed, int threads) {
    domain.validate();
    if (sample_count < 1000) {
        throw std::invalid_argument("monte_carlo_reference: need at least 1000 samples");
    }
    for (int m : domain.levels) {
        if (m > 65535) throw std::invalid_argument("monte_carlo_reference: too many levels");
    }
    Rng rng(seed);
    LevelMatrix levels(sample_count, domain.dimension());
    for (std::int64_t i = 0; i < sample_count; ++i) {
        for (int d = 0; d < domain.dimension(); ++d) {
            levels(i, d) = static_cast<std::uint16_t>(
                rng.index(static_cast<std::uint64_t>(domain.levels[static_cast<std::size_t>(d)])));
        }
    }
    const Eigen::MatrixXd responses = evaluate_rows(domain, model, levels, threads);
    return rank_correlations(levels, responses, domain.levels);
}

double correlation_error(const Eigen::Ref<const Eigen::VectorXd>& estimated,
                         const Eigen::Ref<const Eigen::VectorXd>& reference) {
    if (estimated.size() != reference.size()) {
        throw std::invalid_argument("correlation_error: length mismatch");
    }
    return (estimated - reference).cwiseAbs().mean();
}

SensitivityReport make_report(std::string design_id, std::string model_id, int sample_count,
                              Eigen::MatrixXd estimated, Eigen::MatrixXd reference) {
    if (estimated.rows() != reference.rows() || estimated.cols() != reference.cols()) {
        throw std::invalid_argument("make_report: shape mismatch");
    }
    SensitivityReport report;
    report.design_id = std::move(design_id);
    report.model_id = std::move(model_id);
    report.sample_count = sample_count;
    report.estimated = std::move(estimated);
    report.reference = std::move(reference);
    report.epsilon.resize(report.estimated.cols());
    for (int r = 0; r < report.estimated.cols(); ++r) {
        report.epsilon(r) = correlation_error(report.estimated.col(r), report.reference.col(r));
    }
    report.epsilon_mean = report.epsilon.mean();
    return report;
}

}  // namespace doe
