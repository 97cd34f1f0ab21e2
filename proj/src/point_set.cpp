#include "point_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcgrid {

PointSet translate_to_grid(PointSet ps) {
    if (ps.points.empty()) throw std::invalid_argument("translate_to_grid: empty point set");
    int64_t min_x = ps.points[0].x, min_y = ps.points[0].y;
    for (const Vec& p : ps.points) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
    }
    for (Vec& p : ps.points) {
        p.x = checked_sub(p.x, min_x);
        p.y = checked_sub(p.y, min_y);
    }
    return ps;
}

int64_t grid_size(const PointSet& ps) {
    if (ps.points.empty()) throw std::invalid_argument("grid_size: empty point set");
    int64_t min_x = ps.points[0].x, max_x = ps.points[0].x;
    int64_t min_y = ps.points[0].y, max_y = ps.points[0].y;
    for (const Vec& p : ps.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    return std::max(checked_sub(max_x, min_x), checked_sub(max_y, min_y));
}

} // namespace dcgrid
