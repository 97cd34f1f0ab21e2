#include "sequences.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace dcgrid {

VectorSequence visible_vectors(int64_t n) {
    if (n < 3) throw std::invalid_argument("visible_vectors: n must be >= 3");
    const int64_t target = 2 * n;

    // The 2n smallest visible vectors span l1 shells up to k with
    // 12k^2/pi^2 ~ 2n, i.e. k ~ pi*sqrt(n/6). A little slack covers the
    // fluctuation of the totient sums; the doubling below is a fallback.
    int64_t bound = static_cast<int64_t>(std::ceil(3.141592653589793 * std::sqrt(static_cast<double>(n) / 6.0))) + 4;
    GcdTable table(std::min(bound, GcdTable::max_bound));

    std::vector<Vec> v = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    v.reserve(static_cast<size_t>(target));

    int64_t k = 1;
    while (static_cast<int64_t>(v.size()) < target) {
        ++k;
        if (k - 1 > table.bound()) table = GcdTable(table.bound() * 2);
        for (int64_t i = 1; i < k && static_cast<int64_t>(v.size()) < target; ++i) {
            int64_t j = k - i;
            if (table.gcd(i, j) != 1) continue;
            v.push_back({i, j});
            v.push_back({-i, -j});
            if (static_cast<int64_t>(v.size()) < target) {
                v.push_back({-i, j});
                v.push_back({i, -j});
            }
        }
    }

    VectorSequence seq;
    seq.vecs = std::move(v);
    return radial_sort_bucket(seq);
}

int angular_class(Vec v) {
    if (v.x == 0 && v.y == 0) throw std::invalid_argument("angular_class: zero vector");
    if (v.y == 0) return v.x > 0 ? 0 : 4;
    if (v.x == 0) return v.y > 0 ? 2 : 6;
    if (v.x > 0 && v.y > 0) return 1;
    if (v.x < 0 && v.y > 0) return 3;
    if (v.x < 0 && v.y < 0) return 5;
    return 7;
}

namespace {

// Rotate an open-quadrant vector into quadrant I; the rotation is angle
// preserving within the quadrant, so bucket order carries over.
Vec rotate_to_first_quadrant(Vec v, int quadrant_class) {
    switch (quadrant_class) {
        case 1: return v;
        case 3: return {v.y, checked_sub(0, v.x)};
        case 5: return -v;
        default: return {checked_sub(0, v.y), v.x};
    }
}

int64_t ceil_div_positive(int64_t a, int64_t b) { return (a + b - 1) / b; }

} // namespace

int64_t bucket_index(Vec first_quadrant, int64_t m) {
    if (first_quadrant.x < 1 || first_quadrant.y < 1)
        throw std::invalid_argument("bucket_index: vector not in the open first quadrant");
    return ceil_div_positive(checked_mul(first_quadrant.x, checked_mul(m, m)),
                             checked_add(first_quadrant.x, first_quadrant.y));
}

VectorSequence radial_sort_bucket(const VectorSequence& v) {
    const std::vector<Vec>& in = v.vecs;
    VectorSequence out;
    out.sorted_ccw = true;
    if (in.empty()) return out;
    out.vecs.reserve(in.size());

    int64_t max_norm = 0;
    for (Vec a : in) max_norm = std::max(max_norm, l1_norm(a));
    const int64_t m = max_norm + 1;
    const int64_t m2 = checked_mul(m, m);

    // Dedicated slots for the four axis directions.
    std::array<bool, 4> axis_used{};
    std::array<Vec, 4> axis_vec{};

    std::vector<Vec> slot(static_cast<size_t>(m2) + 1);
    std::vector<unsigned char> stamp(static_cast<size_t>(m2) + 1, 0);

    auto flush_quadrant = [&](unsigned char epoch) {
        // t grows toward the +x axis, so counterclockwise order within a
        // quadrant reads the buckets from high t to low t.
        for (int64_t t = m2; t >= 1; --t)
            if (stamp[static_cast<size_t>(t)] == epoch) out.vecs.push_back(slot[static_cast<size_t>(t)]);
    };

    for (int pass = 0; pass < 4; ++pass) {
        int axis_class = 2 * pass;          // +x, +y, -x, -y
        int quadrant_class = 2 * pass + 1;  // open quadrant that follows it
        unsigned char epoch = static_cast<unsigned char>(pass + 1);
        for (Vec a : in) {
            int cls = angular_class(a);
            if (cls == axis_class) {
                size_t idx = static_cast<size_t>(pass);
                if (axis_used[idx])
                    throw std::invalid_argument("radial_sort_bucket: two vectors on one axis direction");
                axis_used[idx] = true;
                axis_vec[idx] = a;
            } else if (cls == quadrant_class) {
                Vec q = rotate_to_first_quadrant(a, cls);
                int64_t t = bucket_index(q, m);
                if (stamp[static_cast<size_t>(t)] == epoch)
                    throw std::invalid_argument("radial_sort_bucket: bucket collision (duplicate or non-visible input)");
                stamp[static_cast<size_t>(t)] = epoch;
                slot[static_cast<size_t>(t)] = a;
            }
        }
        size_t idx = static_cast<size_t>(pass);
        if (axis_used[idx]) out.vecs.push_back(axis_vec[idx]);
        flush_quadrant(epoch);
    }
    return out;
}

VectorSequence radial_sort_compare(const VectorSequence& v) {
    VectorSequence out;
    out.vecs = v.vecs;
    out.sorted_ccw = true;
    std::sort(out.vecs.begin(), out.vecs.end(), [](Vec a, Vec b) {
        int ca = angular_class(a), cb = angular_class(b);
        if (ca != cb) return ca < cb;
        if (ca % 2 == 0) return false; // same axis direction: equivalent
        return turn2(a, b) > 0;
    });
    for (size_t i = 1; i < out.vecs.size(); ++i) {
        Vec a = out.vecs[i - 1], b = out.vecs[i];
        if (angular_class(a) == angular_class(b) && turn2(a, b) == 0)
            throw std::invalid_argument("radial_sort_compare: duplicate direction");
    }
    return out;
}

VectorSequence alternate(const VectorSequence& v) {
    if (v.vecs.size() % 2 != 0) throw std::invalid_argument("alternate: even length required");
    VectorSequence out;
    out.vecs.reserve(v.vecs.size());
    for (size_t i = 0; i + 1 < v.vecs.size(); i += 2) {
        out.vecs.push_back(v.vecs[i + 1]);
        out.vecs.push_back(v.vecs[i]);
    }
    return out;
}

VectorSequence scaled(int64_t c, const VectorSequence& v) {
    if (c == 0) throw std::invalid_argument("scaled: zero factor");
    VectorSequence out;
    out.vecs.reserve(v.vecs.size());
    for (Vec a : v.vecs) out.vecs.push_back(c * a);
    // Negative factors rotate every direction by half a turn, which breaks
    // the canonical (1,0) start.
    out.sorted_ccw = v.sorted_ccw && c > 0;
    return out;
}

PointSet prefix_sums(const VectorSequence& v) {
    if (v.vecs.empty()) throw std::invalid_argument("prefix_sums: empty sequence");
    std::vector<Vec> pts;
    pts.reserve(v.vecs.size());
    Vec acc{0, 0};
    for (Vec a : v.vecs) {
        acc = acc + a;
        pts.push_back(acc);
    }
    return make_point_set(std::move(pts));
}

} // namespace dcgrid
