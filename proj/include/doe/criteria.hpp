#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "doe/domain.hpp"

namespace doe {

/// The eight minimized design-quality functionals, in the table/figure
/// ordering used throughout the experiment outputs.
enum class CriterionId { AE, EMM, ML2, Dopt, PMCC, SRCC, KRCC, CN };

const std::array<CriterionId, 8>& all_criteria();
std::string_view to_string(CriterionId id);
std::optional<CriterionId> parse_criterion(std::string_view name);

/// Regression-basis setup for the D-optimality criterion.
///   base_degree  full polynomial degree of the base basis; unset picks the
///                largest degree whose basis has at most n columns.
///   bayes_terms  count of next-order pure powers appended per dimension.
///   tau          diagonal constant added for the appended columns, in (0,1].
struct DoptConfig {
    std::optional<int> base_degree;
    int bayes_terms = 0;
    double tau = 1.0;
};

struct RegressionBasis {
    Eigen::MatrixXd Z;
    std::vector<int> augmented;  // indices of appended columns
};

/// Full polynomial basis over [0,1]-normalized coordinates, plus pure-power
/// augmentation columns for every dimension. Column layout per degree group:
/// pure powers in dimension order, then the remaining mixed monomials.
RegressionBasis build_regression_matrix(const Design& design, const DomainSpec& domain,
                                        const DoptConfig& cfg);

/// Potential energy sum 1/L^2 over all point pairs; +inf on duplicates.
double eval_ae(const Design& design);

/// Negated minimum pairwise Euclidean distance; 0 iff duplicates exist.
double eval_emm(const Design& design);

/// Modified L2 discrepancy over [0,1]-normalized coordinates.
double eval_ml2(const Design& design, const DomainSpec& domain);

/// Negated determinant of the (Bayes-augmented) information matrix.
double eval_dopt(const Design& design, const DomainSpec& domain, const DoptConfig& cfg);

/// Condition number of X^T X. Columns are centered to zero sum and then
/// affinely mapped so each spans exactly [-1,1]; with that scaling a design
/// duplicating the corner opposite an otherwise complete corner set scores
/// the same 1.0 as the complete corner set itself.
/// Throws std::domain_error on a constant column; +inf when X^T X is
/// numerically singular.
double eval_cn(const Design& design, const DomainSpec& domain);

/// sqrt of the sum of squared pairwise column Pearson coefficients.
double eval_pmcc(const Design& design);

/// sqrt of the sum of squared pairwise column Spearman coefficients.
double eval_srcc(const Design& design);

/// sqrt of the sum of squared pairwise column Kendall coefficients.
double eval_krcc(const Design& design);

/// Uniform dispatcher; every criterion is minimize-is-better. Evaluator
/// errors propagate.
double evaluate(CriterionId id, const Design& design, const DomainSpec& domain,
               const DoptConfig& dopt_cfg = {});

/// Criterion value for the final point placed at every cell of a 2-D grid,
/// with the given n-1 points fixed. Cells where the evaluator fails (or AE
/// meets a duplicate) carry +inf. result(i, j) is the value for the free
/// point at level indices (i, j).
Eigen::MatrixXd landscape_scan(CriterionId id, const Design& fixed, const DomainSpec& domain,
                               const DoptConfig& dopt_cfg = {});

}  // namespace doe
