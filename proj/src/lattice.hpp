// Exact integer lattice primitives: checked 64-bit arithmetic, turn
// (orientation) predicates, gcd table with constant-time lookup, visibility.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dcgrid {

using std::int64_t;

// All coordinate arithmetic goes through these helpers; overflow throws
// instead of wrapping.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in add");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in sub");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in mul");
    return r;
}

inline int64_t checked_abs(int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("int64 overflow in abs");
    return a < 0 ? -a : a;
}

// A lattice point and a lattice vector are the same thing here; which one a
// value means depends on context.
struct Vec {
    int64_t x = 0;
    int64_t y = 0;

    friend bool operator==(Vec a, Vec b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Vec a, Vec b) { return !(a == b); }
};

inline Vec operator+(Vec a, Vec b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
inline Vec operator-(Vec a, Vec b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
inline Vec operator-(Vec a) { return {checked_sub(0, a.x), checked_sub(0, a.y)}; }
inline Vec operator*(int64_t c, Vec a) { return {checked_mul(c, a.x), checked_mul(c, a.y)}; }

inline int64_t l1_norm(Vec v) { return checked_add(checked_abs(v.x), checked_abs(v.y)); }

inline int64_t chebyshev_norm(Vec v) {
    int64_t ax = checked_abs(v.x), ay = checked_abs(v.y);
    return ax > ay ? ax : ay;
}

// Twice the signed area of a triangle. Positive = counterclockwise,
// negative = clockwise, zero = collinear.
using TurnValue = int64_t;

// turn(p,q,r): the 3x3 homogeneous determinant | p 1 ; q 1 ; r 1 |.
inline TurnValue turn3(Vec p, Vec q, Vec r) {
    Vec u = q - p;
    Vec v = r - p;
    return checked_sub(checked_mul(u.x, v.y), checked_mul(u.y, v.x));
}

// turn(p,q) := turn(origin, p, q) = p.x*q.y - p.y*q.x.
inline TurnValue turn2(Vec p, Vec q) {
    return checked_sub(checked_mul(p.x, q.y), checked_mul(p.y, q.x));
}

inline int sign_of(int64_t v) { return (v > 0) - (v < 0); }

// Precomputed gcd(i,j) for all 0 <= i,j <= bound, O(1) lookup.
// Cells are filled by increasing i+j so that gcd(i,j) = gcd(i-j,j) always
// refers to an already-filled cell.
class GcdTable {
public:
    // Largest accepted bound; caps the table at ~1 GiB.
    static constexpr int64_t max_bound = 16383;

    explicit GcdTable(int64_t bound);

    int64_t bound() const { return bound_; }

    // Constant time, contract-checked.
    int64_t gcd(int64_t i, int64_t j) const {
        if (i < 0 || j < 0 || i > bound_ || j > bound_)
            throw std::invalid_argument("GcdTable::gcd: index out of table range");
        return entries_[static_cast<size_t>(i) * stride_ + static_cast<size_t>(j)];
    }

private:
    int64_t bound_ = 0;
    size_t stride_ = 0;
    std::vector<std::uint32_t> entries_;
};

inline GcdTable build_gcd_table(int64_t bound) { return GcdTable(bound); }

// A vector is visible from the origin iff gcd(|x|,|y|) = 1.
inline bool is_visible(Vec v, const GcdTable& t) {
    if (v.x == 0 && v.y == 0) throw std::invalid_argument("is_visible: zero vector");
    return t.gcd(checked_abs(v.x), checked_abs(v.y)) == 1;
}

// Number of lattice points strictly between p and q on the segment pq.
inline int64_t segment_lattice_points(Vec p, Vec q) {
    if (p == q) throw std::invalid_argument("segment_lattice_points: p == q");
    int64_t dx = checked_abs(checked_sub(q.x, p.x));
    int64_t dy = checked_abs(checked_sub(q.y, p.y));
    return std::gcd(dx, dy) - 1;
}

} // namespace dcgrid
