// Ordered lattice point sets with role labels (hull vertex / inner point).
#pragma once

#include <vector>

#include "lattice.hpp"

namespace dcgrid {

enum class Role : unsigned char { Unlabeled = 0, Hull = 1, Inner = 2 };

struct PointSet {
    std::vector<Vec> points;
    std::vector<Role> roles; // parallel to points

    size_t size() const { return points.size(); }
};

inline PointSet make_point_set(std::vector<Vec> pts) {
    PointSet ps;
    ps.roles.assign(pts.size(), Role::Unlabeled);
    ps.points = std::move(pts);
    return ps;
}

// Shift the set so that min x = min y = 0. Roles are preserved.
PointSet translate_to_grid(PointSet ps);

// Smallest N such that a translate of the set fits in [0,N]^2:
// max of the x-extent and the y-extent.
int64_t grid_size(const PointSet& ps);

} // namespace dcgrid
