#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace doe {

/// Discrete search grid: per-dimension level counts plus optional physical
/// values attached to the levels. Criteria operate on level indices; physical
/// values are consumed by response models only.
struct DomainSpec {
    std::vector<int> levels;
    std::vector<Eigen::VectorXd> values;  // empty, or one strictly increasing vector per dimension

    int dimension() const { return static_cast<int>(levels.size()); }
    bool has_values() const { return !values.empty(); }

    /// Physical value of a level, or the index itself when no values are set.
    double value_at(int dim, int index) const;

    /// Product of level counts. Throws std::overflow_error past 2^62 cells.
    std::uint64_t total_cells() const;

    void validate() const;
};

/// n-by-k matrix of level indices. lh_constrained marks designs produced
/// under the Latin Hypercube restriction (including rounded mixed designs).
struct Design {
    Eigen::MatrixXi points;
    bool lh_constrained = false;

    int point_count() const { return static_cast<int>(points.rows()); }
    int dimension() const { return static_cast<int>(points.cols()); }
};

/// Checks index bounds against the domain and, for lh_constrained designs
/// whose point count equals a dimension's level count, the one-point-per-level
/// property in that dimension. Throws std::invalid_argument.
void validate_design(const Design& design, const DomainSpec& domain);

/// Restriction of the design to a subset of dimensions. Duplicate rows are
/// permitted in the result.
Design project(const Design& design, const std::vector<int>& keep_dims);

/// Number of points minus the number of distinct points.
int redundant_count(const Design& design);

bool has_duplicate_rows(const Design& design);

/// Cell id <-> coordinates, mixed radix with dimension 0 least significant.
std::uint64_t cell_id(const Eigen::RowVectorXi& point, const DomainSpec& domain);
Eigen::RowVectorXi cell_coords(std::uint64_t id, const DomainSpec& domain);

}  // namespace doe
