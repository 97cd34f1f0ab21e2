// Symmetric sequences of visible lattice vectors: generation, radial
// sorting (linear-time bucket scheme and an exact comparison sort),
// pair alternation, scaling, and prefix-sum point construction.
#pragma once

#include "lattice.hpp"
#include "point_set.hpp"

namespace dcgrid {

struct VectorSequence {
    std::vector<Vec> vecs;
    // Certificate: strictly increasing counterclockwise angular order,
    // starting from direction (1,0).
    bool sorted_ccw = false;
};

// The 2n visible vectors of smallest l1 norm, grown shell by shell:
// seed (1,0),(-1,0),(0,1),(0,-1); then for each shell k = 2,3,... and
// i = 1..k-1 with gcd(i,k-i) = 1, append the antipodal pair (i,k-i),
// (-i,-(k-i)) and then the pair (-i,k-i),(i,-(k-i)), stopping at 2n.
// Result is sorted counterclockwise. Runs in O(n) using a gcd table
// and the bucket sort below.
VectorSequence visible_vectors(int64_t n);

// Counterclockwise sort in O(|V| + m^2) time, m = 1 + max l1 norm.
// Each vector of an open quadrant is mapped to quadrant I by rotation
// and dropped into bucket t = ceil(i*m^2/(i+j)); distinct visible
// vectors never share a bucket. Axis vectors get four dedicated slots.
// Two vectors in one bucket means the input was not a set of distinct
// visible vectors and raises an error.
VectorSequence radial_sort_bucket(const VectorSequence& v);

// Exact comparison sort by angular class and turn2 sign; the oracle the
// bucket sort is checked against. Duplicate directions are an error.
VectorSequence radial_sort_compare(const VectorSequence& v);

// [v1,v2,v3,v4,...] -> [v2,v1,v4,v3,...]; requires even length.
VectorSequence alternate(const VectorSequence& v);

// Multiply every vector by c (c != 0, integer only).
VectorSequence scaled(int64_t c, const VectorSequence& v);

// Prefix sums: p_1 = v_1, p_i = p_{i-1} + v_i. For a symmetric sequence
// the result is a closed convex polygon (last point = origin).
PointSet prefix_sums(const VectorSequence& v);

// Angular class counted counterclockwise from the +x axis: even values
// are the four axes, odd values the open quadrants. Total order on
// directions together with turn2 within a class.
int angular_class(Vec v);

// Bucket of an open-first-quadrant vector among the m^2 area-1/2
// triangles fanned from the origin under the chord from (0,m) to (m,0):
// t = ceil(x*m^2/(x+y)), in [1, m^2], increasing toward the +x axis.
int64_t bucket_index(Vec first_quadrant, int64_t m);

} // namespace dcgrid
