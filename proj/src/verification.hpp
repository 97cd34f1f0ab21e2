// Exact verification: convex hull, the double-circle conditions, Pick
// counts for lattice triangles, and the turn-sign check on blended
// vector windows that underpins the double-circle construction.
#pragma once

#include <optional>

#include "point_set.hpp"

namespace dcgrid {

enum class Condition {
    None,
    HullCount,        // number of hull vertices != n
    GeneralPosition,  // duplicate points or three collinear points
    Proximity,        // inner points cannot be matched to distinct hull edges
    SeparationInner,  // line (hull vertex, its inner point) fails to separate the next hull vertex
    SeparationNext,   // line (inner point, next hull vertex) fails to separate the hull vertex
};

// Canonical tag strings: hull-count, general-position, cond-2-proximity,
// cond-3-separation, cond-4-separation.
const char* condition_tag(Condition c);

struct VerificationReport {
    bool passed = false;
    Condition failed = Condition::None;
    std::vector<size_t> witness; // indices into the checked point set
    size_t hull_count = 0;
};

// Hull vertices in counterclockwise order starting from the
// lexicographically smallest point; collinear points are dropped.
// All input collinear is an error. |P| >= 3 required.
PointSet convex_hull(const PointSet& ps);

// Indices into `pts` of the hull vertices, same order convention.
// Empty result when all points are collinear.
std::vector<size_t> convex_hull_indices(const std::vector<Vec>& pts);

// Check the double-circle conditions on a set of 2n >= 6 points:
// exactly n hull vertices; no duplicate points and no three collinear
// (exhaustive for n <= 200, spot-sampled 10^5 triples above); every
// non-hull point matched to its own hull edge; and for every edge
// (p_i, p_{i+1}) with inner point p'_i, the line through p_i and p'_i
// strictly separates p_{i+1} from every other point, and the line
// through p'_i and p_{i+1} strictly separates p_i likewise. All checks
// are exact integer sign tests; input roles are ignored and the
// labeling is rediscovered from the geometry.
VerificationReport is_double_circle(const PointSet& ps);

struct PickCounts {
    int64_t interior = 0;
    int64_t boundary = 0;
    int64_t doubled_area = 0; // = 2*interior + boundary - 2
};

// Lattice-point counts of a non-degenerate triangle: boundary from the
// per-edge gcd counts, interior from the doubled area via Pick's
// identity.
PickCounts pick_counts(Vec p, Vec q, Vec r);

// Turn-sign conditions on a window a1..a4 of consecutive sorted visible
// vectors whose halves (a1,a2) and (a3,a4) are swap-pairs: with the
// scaled blend points q1 = 2*a2 + a1, q2 = q1 + 2*a1 + a2,
// q3 = q2 + 2*a4 + a3, q4 = q3 + 2*a3 + a4, requires
//   turn2(q1,q2) < 0, turn2(q1,q3) > 0, turn2(q1,q4) > 0,
//   turn3(q4,q3,q1) < 0, turn3(q4,q3,o) < 0.
bool check_lemma4(Vec a1, Vec a2, Vec a3, Vec a4);

} // namespace dcgrid
