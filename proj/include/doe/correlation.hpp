#pragma once

#include <Eigen/Dense>

namespace doe {

/// Product-moment correlation. Throws std::domain_error when either side has
/// zero variance.
double pearson(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y);

/// Rank correlation. Uses the classical 1 - 6*sum(d^2)/(n(n^2-1)) form when
/// both sides are tie-free, and the product-moment formula on mid-ranks
/// otherwise. A side with zero rank variance yields 0.
double spearman(const Eigen::Ref<const Eigen::VectorXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& y);

/// Kendall correlation with the fixed n(n-1)/2 denominator; tied pairs count
/// as neither concordant nor discordant.
double kendall(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y);

bool has_ties(const Eigen::Ref<const Eigen::VectorXd>& values);

}  // namespace doe
