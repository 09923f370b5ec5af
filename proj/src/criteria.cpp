#include "doe/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doe/correlation.hpp"
#include "doe/transforms.hpp"

namespace doe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

const std::array<CriterionId, 8>& all_criteria() {
    static const std::array<CriterionId, 8> ids = {
        CriterionId::AE,   CriterionId::EMM,  CriterionId::ML2,  CriterionId::Dopt,
        CriterionId::PMCC, CriterionId::SRCC, CriterionId::KRCC, CriterionId::CN};
    return ids;
}

std::string_view to_string(CriterionId id) {
    switch (id) {
        case CriterionId::AE: return "AE";
        case CriterionId::EMM: return "EMM";
        case CriterionId::ML2: return "ML2";
        case CriterionId::Dopt: return "Dopt";
        case CriterionId::PMCC: return "PMCC";
        case CriterionId::SRCC: return "SRCC";
        case CriterionId::KRCC: return "KRCC";
        case CriterionId::CN: return "CN";
    }
    return "?";
}

std::optional<CriterionId> parse_criterion(std::string_view name) {
    for (CriterionId id : all_criteria()) {
        if (name == to_string(id)) return id;
    }
    // accept common lowercase spellings
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (CriterionId id : all_criteria()) {
        std::string ref(to_string(id));
        std::transform(ref.begin(), ref.end(), ref.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (lower == ref) return id;
    }
    return std::nullopt;
}

namespace {

long binomial(int n, int r) {
    long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

/// Column count of the full polynomial basis of the given degree: C(k+g, g).
long full_basis_columns(int k, int degree) { return binomial(k + degree, degree); }

int auto_degree(int k, int n) {
    int g = 0;
    while (full_basis_columns(k, g + 1) <= n) ++g;
    return g;
}

/// Exponent vectors of total degree d over k dims: pure powers first in
/// dimension order, then the remaining monomials in descending lexicographic
/// order of the exponent tuple.
std::vector<std::vector<int>> degree_group(int k, int d) {
    if (d == 0) return {std::vector<int>(static_cast<std::size_t>(k), 0)};

    // enumerate all compositions of d into k parts
    std::vector<std::vector<int>> all;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int dim, int remaining) -> void {
        if (dim == k - 1) {
            cur[static_cast<std::size_t>(dim)] = remaining;
            all.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(dim)] = e;
            self(self, dim + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    std::sort(all.begin(), all.end(), std::greater<>());

    std::vector<std::vector<int>> out;
    for (int dim = 0; dim < k; ++dim) {
        std::vector<int> pure(static_cast<std::size_t>(k), 0);
        pure[static_cast<std::size_t>(dim)] = d;
        out.push_back(pure);
    }
    for (const auto& e : all) {
        if (std::count(e.begin(), e.end(), 0) == k - 1) continue;  // pure, already listed
        out.push_back(e);
    }
    return out;
}

Eigen::VectorXd monomial_column(const Eigen::MatrixXd& x, const std::vector<int>& expo) {
    Eigen::VectorXd col = Eigen::VectorXd::Ones(x.rows());
    for (int d = 0; d < static_cast<int>(expo.size()); ++d) {
        for (int e = 0; e < expo[static_cast<std::size_t>(d)]; ++e) {
            col = col.cwiseProduct(x.col(d));
        }
    }
    return col;
}

}  // namespace

RegressionBasis build_regression_matrix(const Design& design, const DomainSpec& domain,
                                        const DoptConfig& cfg) {
    const int n = design.point_count();
    const int k = design.dimension();
    const int degree = cfg.base_degree ? *cfg.base_degree : auto_degree(k, n);
    if (degree < 0) throw std::invalid_argument("DoptConfig: negative base degree");
    const long base_cols = full_basis_columns(k, degree);
    if (base_cols > n) {
        throw std::invalid_argument("Dopt: base basis has more columns than design points");
    }
    if (!(cfg.tau > 0.0 && cfg.tau <= 1.0)) {
        throw std::invalid_argument("DoptConfig: tau must lie in (0,1]");
    }
    const Eigen::MatrixXd x = normalize_unit(design, domain);

    std::vector<std::vector<int>> exponents;
    for (int d = 0; d <= degree; ++d) {
        for (auto& e : degree_group(k, d)) exponents.push_back(std::move(e));
    }
    const int base_count = static_cast<int>(exponents.size());
    for (int p = degree + 1; p <= degree + cfg.bayes_terms; ++p) {
        for (int dim = 0; dim < k; ++dim) {
            std::vector<int> pure(static_cast<std::size_t>(k), 0);
            pure[static_cast<std::size_t>(dim)] = p;
            exponents.push_back(std::move(pure));
        }
    }

    RegressionBasis basis;
    basis.Z.resize(n, static_cast<int>(exponents.size()));
    for (int c = 0; c < static_cast<int>(exponents.size()); ++c) {
        basis.Z.col(c) = monomial_column(x, exponents[static_cast<std::size_t>(c)]);
    }
    for (int c = base_count; c < static_cast<int>(exponents.size()); ++c) {
        basis.augmented.push_back(c);
    }
    return basis;
}

double eval_ae(const Design& design) {
    const Eigen::VectorXd d2 = pairwise_sq_distances(design);
    double sum = 0.0;
    for (Eigen::Index p = 0; p < d2.size(); ++p) {
        if (d2(p) == 0.0) return kInf;
        sum += 1.0 / d2(p);
    }
    return sum;
}

double eval_emm(const Design& design) {
    return -std::sqrt(pairwise_sq_distances(design).minCoeff());
}

double eval_ml2(const Design& design, const DomainSpec& domain) {
    const Eigen::MatrixXd x = normalize_unit(design, domain);
    const int n = design.point_count();
    const int k = design.dimension();

    double second = 0.0;
    for (int d = 0; d < n; ++d) {
        double prod = 1.0;
        for (int i = 0; i < k; ++i) prod *= 3.0 - x(d, i) * x(d, i);
        second += prod;
    }
    double third = 0.0;
    for (int d = 0; d < n; ++d) {
        for (int j = 0; j < n; ++j) {
            double prod = 1.0;
            for (int i = 0; i < k; ++i) prod *= 2.0 - std::max(x(d, i), x(j, i));
            third += prod;
        }
    }
    const double nn = static_cast<double>(n);
    return std::pow(4.0 / 3.0, k) - std::pow(2.0, 1 - k) / nn * second + third / (nn * nn);
}

double eval_dopt(const Design& design, const DomainSpec& domain, const DoptConfig& cfg) {
    const RegressionBasis basis = build_regression_matrix(design, domain, cfg);
    Eigen::MatrixXd info = basis.Z.transpose() * basis.Z;
    for (int c : basis.augmented) info(c, c) += cfg.tau;
    return -info.determinant();
}

double eval_cn(const Design& design, const DomainSpec& domain) {
    validate_design(design, domain);
    if (design.point_count() < 2) throw std::invalid_argument("eval_cn: need at least two points");
    Eigen::MatrixXd x = design.points.cast<double>();
    for (int d = 0; d < x.cols(); ++d) {
        auto col = x.col(d);
        col.array() -= col.mean();
        const double lo = col.minCoeff();
        const double hi = col.maxCoeff();
        if (hi == lo) throw std::domain_error("eval_cn: constant column " + std::to_string(d));
        col = (col.array() - lo) * (2.0 / (hi - lo)) - 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.transpose() * x,
                                                      Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double lo = ev(0);
    const double hi = ev(ev.size() - 1);
    if (lo <= hi * 1e-14) return kInf;
    return hi / lo;
}

namespace {

double aggregate_pairs(const Design& design,
                       double (*pair_fn)(const Eigen::Ref<const Eigen::VectorXd>&,
                                         const Eigen::Ref<const Eigen::VectorXd>&)) {
    const Eigen::MatrixXd x = design.points.cast<double>();
    const int k = design.dimension();
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const double c = pair_fn(x.col(i), x.col(j));
            sum += c * c;
        }
    }
    return std::sqrt(sum);
}

}  // namespace

double eval_pmcc(const Design& design) { return aggregate_pairs(design, pearson); }
double eval_srcc(const Design& design) { return aggregate_pairs(design, spearman); }
double eval_krcc(const Design& design) { return aggregate_pairs(design, kendall); }

double evaluate(CriterionId id, const Design& design, const DomainSpec& domain,
               const DoptConfig& dopt_cfg) {
    switch (id) {
        case CriterionId::AE: return eval_ae(design);
        case CriterionId::EMM: return eval_emm(design);
        case CriterionId::ML2: return eval_ml2(design, domain);
        case CriterionId::Dopt: return eval_dopt(design, domain, dopt_cfg);
        case CriterionId::PMCC: return eval_pmcc(design);
        case CriterionId::SRCC: return eval_srcc(design);
        case CriterionId::KRCC: return eval_krcc(design);
        case CriterionId::CN: return eval_cn(design, domain);
    }
    throw std::invalid_argument("evaluate: unknown criterion");
}

Eigen::MatrixXd landscape_scan(CriterionId id, const Design& fixed, const DomainSpec& domain,
                               const DoptConfig& dopt_cfg) {
    if (domain.dimension() != 2) {
        throw std::invalid_argument("landscape_scan: 2-D domains only");
    }
    validate_design(fixed, domain);
    const int m0 = domain.levels[0];
    const int m1 = domain.levels[1];
    Design candidate;
    candidate.points.resize(fixed.point_count() + 1, 2);
    candidate.points.topRows(fixed.point_count()) = fixed.points;

    Eigen::MatrixXd out(m0, m1);
    for (int i = 0; i < m0; ++i) {
        for (int j = 0; j < m1; ++j) {
            candidate.points(fixed.point_count(), 0) = i;
            candidate.points(fixed.point_count(), 1) = j;
            double v;
            try {
                v = evaluate(id, candidate, domain, dopt_cfg);
            } catch (const std::exception&) {
                v = kInf;
            }
            out(i, j) = v;
        }
    }
    return out;
}

}  // namespace doe
