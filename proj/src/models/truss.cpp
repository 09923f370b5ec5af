#include "doe/models/truss.hpp"

#include <cmath>
#include <stdexcept>

namespace doe {

double TrussModel::element_length(int e) const {
    const auto& [a, b] = elements[static_cast<std::size_t>(e)];
    return (nodes.row(a) - nodes.row(b)).norm();
}

DomainSpec TrussModel::domain() const {
    DomainSpec d;
    d.levels.assign(static_cast<std::size_t>(group_count),
                    static_cast<int>(area_levels.size()));
    d.values.assign(static_cast<std::size_t>(group_count), area_levels);
    return d;
}

TrussResponse truss_solve(const TrussModel& model, const Eigen::VectorXd& areas) {
    if (areas.size() != model.group_count) {
        throw std::invalid_argument("truss_solve: one area per variable group required");
    }
    if ((areas.array() <= 0.0).any()) {
        throw std::invalid_argument("truss_solve: areas must be positive");
    }
    const int dim = model.spatial_dim();
    const int ndof = model.node_count() * dim;

    Eigen::MatrixXd stiffness = Eigen::MatrixXd::Zero(ndof, ndof);
    double weight = 0.0;
    for (int e = 0; e < model.element_count(); ++e) {
        const auto& [a, b] = model.elements[static_cast<std::size_t>(e)];
        const double area = areas(model.element_group[static_cast<std::size_t>(e)]);
        const double length = model.element_length(e);
        weight += model.specific_weight * area * length;

        const Eigen::VectorXd dir = (model.nodes.row(b) - model.nodes.row(a)).transpose() / length;
        const double coeff = model.youngs_modulus * area / length;
        for (int p = 0; p < dim; ++p) {
            for (int q = 0; q < dim; ++q) {
                const double kpq = coeff * dir(p) * dir(q);
                stiffness(a * dim + p, a * dim + q) += kpq;
                stiffness(b * dim + p, b * dim + q) += kpq;
                stiffness(a * dim + p, b * dim + q) -= kpq;
                stiffness(b * dim + p, a * dim + q) -= kpq;
            }
        }
    }

    std::vector<char> fixed(static_cast<std::size_t>(ndof), 0);
    for (const auto& [node, dof] : model.supports) {
        fixed[static_cast<std::size_t>(node * dim + dof)] = 1;
    }
    std::vector<int> free_dofs;
    for (int i = 0; i < ndof; ++i) {
        if (!fixed[static_cast<std::size_t>(i)]) free_dofs.push_back(i);
    }
    const int nf = static_cast<int>(free_dofs.size());

    Eigen::MatrixXd kff(nf, nf);
    Eigen::VectorXd ff(nf);
    for (int i = 0; i < nf; ++i) {
        ff(i) = model.loads(free_dofs[static_cast<std::size_t>(i)]);
        for (int j = 0; j < nf; ++j) {
            kff(i, j) = stiffness(free_dofs[static_cast<std::size_t>(i)],
                                  free_dofs[static_cast<std::size_t>(j)]);
        }
    }

    Eigen::LLT<Eigen::MatrixXd> llt(kff);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("truss_solve: constrained stiffness matrix is not SPD (mechanism)");
    }
    const Eigen::VectorXd uf = llt.solve(ff);

    Eigen::VectorXd u = Eigen::VectorXd::Zero(ndof);
    for (int i = 0; i < nf; ++i) u(free_dofs[static_cast<std::size_t>(i)]) = uf(i);

    double max_stress = 0.0;
    for (int e = 0; e < model.element_count(); ++e) {
        const auto& [a, b] = model.elements[static_cast<std::size_t>(e)];
        const double length = model.element_length(e);
        const Eigen::VectorXd dir = (model.nodes.row(b) - model.nodes.row(a)).transpose() / length;
        double elongation = 0.0;
        for (int p = 0; p < dim; ++p) {
            elongation += dir(p) * (u(b * dim + p) - u(a * dim + p));
        }
        max_stress = std::max(max_stress,
                              std::abs(model.youngs_modulus * elongation / length));
    }

    TrussResponse response;
    response.weight = weight;
    response.deflection = uf.cwiseAbs().maxCoeff();
    response.stress = max_stress;
    return response;
}

namespace {

Eigen::VectorXd ten_bar_areas() {
    Eigen::VectorXd a(42);
    a << 1.62, 1.80, 1.99, 2.13, 2.38, 2.62, 2.63, 2.83, 2.88, 3.09, 3.13, 3.38, 3.47, 3.55,
        3.63, 3.84, 3.87, 3.88, 4.18, 4.22, 4.49, 4.59, 4.80, 4.97, 5.12, 5.74, 7.22, 7.97,
        11.50, 13.50, 13.90, 14.20, 15.50, 16.00, 16.90, 18.80, 19.90, 22.00, 22.90, 26.50,
        30.00, 33.50;
    return a;
}

Eigen::VectorXd twenty_five_bar_areas() {
    Eigen::VectorXd a(30);
    a << 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7,
        1.8, 1.9, 2.0, 2.1, 2.2, 2.3, 2.4, 2.5, 2.6, 2.8, 3.0, 3.2, 3.4;
    return a;
}

}  // namespace

TrussModel ten_bar() {
    TrussModel m;
    m.name = "ten_bar";
    m.nodes.resize(6, 2);
    m.nodes << 720.0, 360.0,  // 0: top right
        720.0, 0.0,           // 1: bottom right
        360.0, 360.0,         // 2: top middle
        360.0, 0.0,           // 3: bottom middle
        0.0, 360.0,           // 4: top left (support)
        0.0, 0.0;             // 5: bottom left (support)
    m.elements = {{4, 2}, {2, 0}, {5, 3}, {3, 1}, {2, 3},
                  {0, 1}, {4, 3}, {5, 2}, {2, 1}, {3, 0}};
    m.element_group = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    m.group_count = 10;
    m.supports = {{4, 0}, {4, 1}, {5, 0}, {5, 1}};
    m.loads = Eigen::VectorXd::Zero(12);
    m.loads(1 * 2 + 1) = -100000.0;  // P = 100 kips down at both free lower nodes
    m.loads(3 * 2 + 1) = -100000.0;
    m.youngs_modulus = 1e7;
    m.specific_weight = 0.1;
    m.area_levels = ten_bar_areas();
    return m;
}

TrussModel twenty_five_bar() {
    TrussModel m;
    m.name = "twenty_five_bar";
    m.nodes.resize(10, 3);
    m.nodes << -37.5, 0.0, 200.0,  // 0
        37.5, 0.0, 200.0,          // 1
        -37.5, 37.5, 100.0,        // 2
        37.5, 37.5, 100.0,         // 3
        37.5, -37.5, 100.0,        // 4
        -37.5, -37.5, 100.0,       // 5
        -100.0, 100.0, 0.0,        // 6 (support)
        100.0, 100.0, 0.0,         // 7 (support)
        100.0, -100.0, 0.0,        // 8 (support)
        -100.0, -100.0, 0.0;       // 9 (support)
    m.elements = {
        {0, 1},                          // group 1: top chord
        {0, 3}, {1, 2}, {0, 4}, {1, 5},  // group 2: crossing top diagonals
        {1, 4}, {1, 3}, {0, 2}, {0, 5},  // group 3: same-side top legs
        {2, 5}, {3, 4},                  // group 4: mid-level ties (y direction)
        {2, 3}, {4, 5},                  // group 5: mid-level ties (x direction)
        {2, 9}, {5, 6}, {3, 8}, {4, 7},  // group 6: crossing lower diagonals
        {2, 7}, {3, 6}, {5, 8}, {4, 9},  // group 7: crossing lower diagonals
        {2, 6}, {3, 7}, {4, 8}, {5, 9},  // group 8: direct lower legs
    };
    m.element_group = {0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4,
                       5, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7};
    m.group_count = 8;
    for (int node = 6; node <= 9; ++node) {
        for (int dof = 0; dof < 3; ++dof) m.supports.emplace_back(node, dof);
    }
    m.loads = Eigen::VectorXd::Zero(30);
    m.loads(0 * 3 + 0) = 1000.0;    // node 0: (1.0, -10.0, -10.0) kips
    m.loads(0 * 3 + 1) = -10000.0;
    m.loads(0 * 3 + 2) = -10000.0;
    m.loads(1 * 3 + 1) = -10000.0;  // node 1: (0.0, -10.0, -10.0)
    m.loads(1 * 3 + 2) = -10000.0;
    m.loads(2 * 3 + 0) = 500.0;     // node 2: (0.5, 0, 0)
    m.loads(5 * 3 + 0) = 600.0;     // node 5: (0.6, 0, 0)
    m.youngs_modulus = 1e7;
    m.specific_weight = 0.1;
    m.area_levels = twenty_five_bar_areas();
    return m;
}

GridModel as_grid_model(const TrussModel& model) {
    return [model](const Eigen::VectorXd& areas) {
        const TrussResponse r = truss_solve(model, areas);
        Eigen::VectorXd z(3);
        z << r.weight, r.deflection, r.stress;
        return z;
    };
}

}  // namespace doe
