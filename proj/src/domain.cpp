#include "doe/domain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace doe {

double DomainSpec::value_at(int dim, int index) const {
    if (values.empty()) return static_cast<double>(index);
    return values[static_cast<std::size_t>(dim)](index);
}

std::uint64_t DomainSpec::total_cells() const {
    std::uint64_t cells = 1;
    for (int m : levels) {
        const std::uint64_t next = cells * static_cast<std::uint64_t>(m);
        if (next / static_cast<std::uint64_t>(m) != cells || next > (std::uint64_t{1} << 62)) {
            throw std::overflow_error("DomainSpec: grid cell count exceeds 2^62");
        }
        cells = next;
    }
    return cells;
}

void DomainSpec::validate() const {
    if (levels.empty()) throw std::invalid_argument("DomainSpec: no dimensions");
    for (int m : levels) {
        if (m < 2) throw std::invalid_argument("DomainSpec: every level count must be >= 2");
    }
    if (!values.empty()) {
        if (values.size() != levels.size()) {
            throw std::invalid_argument("DomainSpec: values must cover every dimension");
        }
        for (std::size_t d = 0; d < values.size(); ++d) {
            if (values[d].size() != levels[d]) {
                throw std::invalid_argument("DomainSpec: value list length must equal level count");
            }
            for (int i = 1; i < values[d].size(); ++i) {
                if (!(values[d](i) > values[d](i - 1))) {
                    throw std::invalid_argument("DomainSpec: values must be strictly increasing");
                }
            }
        }
    }
}

void validate_design(const Design& design, const DomainSpec& domain) {
    domain.validate();
    if (design.dimension() != domain.dimension()) {
        throw std::invalid_argument("Design/DomainSpec dimension mismatch");
    }
    const int n = design.point_count();
    const int k = design.dimension();
    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < k; ++d) {
            const int idx = design.points(i, d);
            if (idx < 0 || idx >= domain.levels[static_cast<std::size_t>(d)]) {
                throw std::invalid_argument("Design: level index out of range in dimension " +
                                            std::to_string(d));
            }
        }
    }
    if (design.lh_constrained) {
        for (int d = 0; d < k; ++d) {
            if (domain.levels[static_cast<std::size_t>(d)] != n) continue;
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) {
                char& slot = seen[static_cast<std::size_t>(design.points(i, d))];
                if (slot) {
                    throw std::invalid_argument(
                        "Design: LH constraint violated (level reused) in dimension " +
                        std::to_string(d));
                }
                slot = 1;
            }
        }
    }
}

Design project(const Design& design, const std::vector<int>& keep_dims) {
    if (keep_dims.empty()) throw std::invalid_argument("project: empty dimension set");
    for (int d : keep_dims) {
        if (d < 0 || d >= design.dimension()) {
            throw std::invalid_argument("project: dimension index out of range");
        }
    }
    Design out;
    out.points.resize(design.point_count(), static_cast<int>(keep_dims.size()));
    for (std::size_t j = 0; j < keep_dims.size(); ++j) {
        out.points.col(static_cast<int>(j)) = design.points.col(keep_dims[j]);
    }
    out.lh_constrained = false;
    return out;
}

namespace {

std::vector<std::vector<int>> sorted_rows(const Design& design) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(design.point_count()));
    for (int i = 0; i < design.point_count(); ++i) {
        rows[static_cast<std::size_t>(i)].assign(design.points.row(i).begin(),
                                                 design.points.row(i).end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace

int redundant_count(const Design& design) {
    if (design.point_count() == 0) return 0;
    auto rows = sorted_rows(design);
    const auto distinct = std::unique(rows.begin(), rows.end()) - rows.begin();
    return design.point_count() - static_cast<int>(distinct);
}

bool has_duplicate_rows(const Design& design) { return redundant_count(design) > 0; }

std::uint64_t cell_id(const Eigen::RowVectorXi& point, const DomainSpec& domain) {
    std::uint64_t id = 0;
    for (int d = domain.dimension() - 1; d >= 0; --d) {
        id = id * static_cast<std::uint64_t>(domain.levels[static_cast<std::size_t>(d)]) +
             static_cast<std::uint64_t>(point(d));
    }
    return id;
}

Eigen::RowVectorXi cell_coords(std::uint64_t id, const DomainSpec& domain) {
    Eigen::RowVectorXi point(domain.dimension());
    for (int d = 0; d < domain.dimension(); ++d) {
        const auto m = static_cast<std::uint64_t>(domain.levels[static_cast<std::size_t>(d)]);
        point(d) = static_cast<int>(id % m);
        id /= m;
    }
    return point;
}

}  // namespace doe
