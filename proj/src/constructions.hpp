// Point set constructions: the O(n)-time double circle of grid size
// O(n^(3/2)), Jarnik polygons with their exact count/size sums, and two
// quadratic-size reference constructions.
#pragma once

#include "point_set.hpp"
#include "sequences.hpp"

namespace dcgrid {

// 2n-point double circle, n >= 3, in construction coordinates (before the
// final translation). Points alternate inner, hull, inner, hull, ...; the
// verifier checks that independently. With [a_1..a_2n] the alternated
// visible-vector sequence, the edge vectors are 2a_i + a_{i+1} and
// a_i + 2a_{i+1} for odd i: the 1/3-blend of adjacent vectors with the
// final 3x scaling already folded in, so all arithmetic stays integral.
PointSet build_double_circle_raw(int64_t n);

// Same, translated to the grid [0,N]^2.
PointSet build_double_circle(int64_t n);

// Convex polygon whose edge vectors are exactly the visible vectors of
// Chebyshev norm <= q, in counterclockwise order; translated to [0,N]^2.
PointSet jarnik_polygon(int64_t q);

struct JarnikSummary {
    int64_t q = 0;
    int64_t vertex_count = 0; // 4 + 4 * #{(i,j) in [1,q]^2 : gcd(i,j)=1}
    int64_t size_s = 0;       // 1 + 2 * sum of i over those pairs
};

// Exact sums by exhaustive coprime-pair enumeration.
JarnikSummary jarnik_counts(int64_t q);

// Quadratic-size double circle from f(x) = x^2 + x: (i, f(i)) for odd i,
// (i, f(i)+2) for even i, i = 1..2n-1, plus (n, 2n^2-n). Grid size
// 4n^2 - 2n - 2. Construction coordinates (not translated).
PointSet quadratic_baseline(int64_t n);

// Double circle from the symmetric sequence (1,1),(1,2),...,(1,n) and its
// negations; n >= 4 even; size Theta(n^2). Construction coordinates.
PointSet naive_symmetric(int64_t n);

} // namespace dcgrid
