#include "doe/models/analytical.hpp"

#include <cmath>

namespace doe {

const std::vector<AnalyticalModel>& analytical_suite() {
    static const std::vector<AnalyticalModel> suite = {
        {1, "linear", "x1 + x2", [](double u, double v) { return u + v; }},
        {2, "x1_dominant", "x1 + 0.01*x2", [](double u, double v) { return u + 0.01 * v; }},
        {3, "x2_dominant", "0.01*x1 + x2", [](double u, double v) { return 0.01 * u + v; }},
        {4, "weighted_plane", "2*x1 + 0.5*x2", [](double u, double v) { return 2.0 * u + 0.5 * v; }},
        {5, "product", "(0.5 + x1)*(0.5 + x2)",
         [](double u, double v) { return (0.5 + u) * (0.5 + v); }},
        {6, "exp_sum", "exp(x1 + x2)", [](double u, double v) { return std::exp(u + v); }},
        {7, "exp_skew", "exp(2*x1 + 0.5*x2)",
         [](double u, double v) { return std::exp(2.0 * u + 0.5 * v); }},
        {8, "saturating", "tanh(2*x1) + tanh(2*x2)",
         [](double u, double v) { return std::tanh(2.0 * u) + std::tanh(2.0 * v); }},
        {9, "sqrt_sum", "sqrt(x1) + sqrt(x2)",
         [](double u, double v) { return std::sqrt(u) + std::sqrt(v); }},
        {10, "cubic_sum", "x1^3 + x2^3",
         [](double u, double v) { return u * u * u + v * v * v; }},
        {11, "sigmoid_ramp", "1/(1 + exp(-10*(x1 - 0.5))) + 0.3*x2",
         [](double u, double v) { return 1.0 / (1.0 + std::exp(-10.0 * (u - 0.5))) + 0.3 * v; }},
        {12, "log_sum", "log(1 + 5*x1) + log(1 + 5*x2)",
         [](double u, double v) { return std::log1p(5.0 * u) + std::log1p(5.0 * v); }},
        {13, "mixed_power", "x1^(1/3) + x2^3",
         [](double u, double v) { return std::cbrt(u) + v * v * v; }},
        {14, "exp_interaction", "exp(x1*x2) + 0.2*(x1 + x2)",
         [](double u, double v) { return std::exp(u * v) + 0.2 * (u + v); }},
        {15, "opposing", "x2 - x1", [](double u, double v) { return v - u; }},
    };
    return suite;
}

DomainSpec analytical_domain(const std::vector<int>& levels) {
    DomainSpec domain;
    domain.levels = levels;
    for (int m : levels) {
        domain.values.push_back(Eigen::VectorXd::LinSpaced(m, 0.0, 1.0));
    }
    return domain;
}

GridModel as_grid_model(const AnalyticalModel& model) {
    auto f = model.f;
    return [f](const Eigen::VectorXd& x) {
        Eigen::VectorXd z(1);
        z(0) = f(x(0), x(1));
        return z;
    };
}

}  // namespace doe
