#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "doe/domain.hpp"
#include "doe/sensitivity.hpp"

namespace doe {

/// Pin-jointed truss under static nodal loads. Units: inches, pounds, psi.
struct TrussModel {
    std::string name;
    Eigen::MatrixXd nodes;                      // n_nodes x spatial dim
    std::vector<std::pair<int, int>> elements;  // node index pairs
    std::vector<int> element_group;             // element -> design variable
    int group_count = 0;
    std::vector<std::pair<int, int>> supports;  // fixed (node, dof) pairs
    Eigen::VectorXd loads;                      // n_nodes * dim, lb
    double youngs_modulus = 0.0;                // psi
    double specific_weight = 0.0;               // lb/in^3
    Eigen::VectorXd area_levels;                // admissible areas shared by all variables, in^2

    int spatial_dim() const { return static_cast<int>(nodes.cols()); }
    int node_count() const { return static_cast<int>(nodes.rows()); }
    int element_count() const { return static_cast<int>(elements.size()); }
    double element_length(int e) const;

    /// Search grid: one dimension per variable group, levels = admissible areas.
    DomainSpec domain() const;
};

/// Total weight, max absolute nodal displacement component, max absolute
/// axial stress.
struct TrussResponse {
    double weight = 0.0;
    double deflection = 0.0;
    double stress = 0.0;
};

/// Direct stiffness solution for the given per-group areas. Throws
/// std::runtime_error when the constrained stiffness matrix is not positive
/// definite (mechanism).
TrussResponse truss_solve(const TrussModel& model, const Eigen::VectorXd& areas);

/// Planar cantilever benchmark: 6 nodes on 360-in panels, 10 bars, one
/// variable per bar with 42 admissible areas, two 100-kip tip loads.
TrussModel ten_bar();

/// Spatial tower benchmark: 10 nodes, 25 bars in 8 symmetry groups with 30
/// admissible areas each, loads applied at the four upper nodes.
TrussModel twenty_five_bar();

/// GridModel adapter returning (weight, deflection, stress).
GridModel as_grid_model(const TrussModel& model);

}  // namespace doe
