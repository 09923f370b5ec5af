#pragma once

#include <functional>
#include <string>
#include <vector>

#include "doe/domain.hpp"
#include "doe/sensitivity.hpp"

namespace doe {

/// Two-parameter response surface on the unit square, monotone in each
/// argument over any grid.
struct AnalyticalModel {
    int id = 0;
    std::string name;
    std::string formula;
    std::function<double(double, double)> f;
};

/// Fifteen monotone benchmark surfaces spanning planes, dominant-variable
/// ramps, products, exponentials, saturating shapes, steep transitions and an
/// opposing-direction pair.
const std::vector<AnalyticalModel>& analytical_suite();

/// Square m-level grid on [0,1]^2 whose physical values are the normalized
/// coordinates the analytical models expect. Non-square grids use the
/// per-dimension level counts.
DomainSpec analytical_domain(const std::vector<int>& levels);

/// GridModel adapter (single response component).
GridModel as_grid_model(const AnalyticalModel& model);

}  // namespace doe
