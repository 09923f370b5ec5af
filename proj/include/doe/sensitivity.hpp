#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>

#include "doe/domain.hpp"
#include "doe/rng.hpp"

namespace doe {

/// Response model over physical parameter values; returns one value per
/// response component.
using GridModel = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Per-column Spearman correlation between inputs and a response vector.
/// Requires n >= 3. A constant response yields zeros (with a warning on
/// stderr).
Eigen::VectorXd param_response_srcc(const Eigen::MatrixXd& inputs,
                                    const Eigen::VectorXd& response);

/// Same, for multi-component responses (one column per component); returns
/// a k-by-r matrix.
Eigen::MatrixXd param_response_srcc(const Eigen::MatrixXd& inputs,
                                    const Eigen::MatrixXd& responses);

/// Reference correlations from the exhaustive grid evaluation of the model.
/// Throws when the grid exceeds max_cells.
Eigen::MatrixXd full_design_reference(const DomainSpec& domain, const GridModel& model,
                                      std::uint64_t max_cells = 1'000'000);

/// Reference correlations from uniform sampling of level combinations with
/// replacement. Model evaluations run on `threads` workers; the result is
/// independent of the thread count.
Eigen::MatrixXd monte_carlo_reference(const DomainSpec& domain, const GridModel& model,
                                      std::int64_t sample_count, RngSeed seed, int threads = 1);

/// Mean absolute component difference between two correlation vectors.
double correlation_error(const Eigen::Ref<const Eigen::VectorXd>& estimated,
                         const Eigen::Ref<const Eigen::VectorXd>& reference);

struct SensitivityReport {
    std::string design_id;
    std::string model_id;
    int sample_count = 0;
    Eigen::MatrixXd estimated;  // k x r
    Eigen::MatrixXd reference;  // k x r
    Eigen::VectorXd epsilon;    // per response component
    double epsilon_mean = 0.0;  // unweighted mean over components
};

SensitivityReport make_report(std::string design_id, std::string model_id, int sample_count,
                              Eigen::MatrixXd estimated, Eigen::MatrixXd reference);

}  // namespace doe
