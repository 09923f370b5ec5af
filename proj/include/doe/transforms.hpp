#pragma once

#include <Eigen/Dense>

#include "doe/domain.hpp"

namespace doe {

/// Column-wise map of level indices onto [0,1]: index / (level_count - 1).
Eigen::MatrixXd normalize_unit(const Design& design, const DomainSpec& domain);

/// Columns shifted to zero sum, then divided by the maximum absolute
/// deviation, so entries lie in [-1,1] with at least one at +-1.
/// Throws std::domain_error on a constant column.
Eigen::MatrixXd center_scale(const Design& design, const DomainSpec& domain);

/// Mid-ranks in [1, n]; ties share the average of their positions.
Eigen::VectorXd ranks(const Eigen::Ref<const Eigen::VectorXd>& values);

/// Squared Euclidean distances over level-index coordinates for all pairs
/// i < j in lexicographic pair order. Requires n >= 2.
Eigen::VectorXd pairwise_sq_distances(const Design& design);

}  // namespace doe
