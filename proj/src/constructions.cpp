#include "constructions.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace dcgrid {

PointSet build_double_circle_raw(int64_t n) {
    if (n < 3) throw std::invalid_argument("build_double_circle: n must be >= 3");
    VectorSequence alt = alternate(visible_vectors(n));

    VectorSequence edges;
    edges.vecs.reserve(alt.vecs.size());
    for (size_t i = 0; i + 1 < alt.vecs.size(); i += 2) {
        Vec a = alt.vecs[i], b = alt.vecs[i + 1];
        edges.vecs.push_back(2 * a + b);
        edges.vecs.push_back(a + 2 * b);
    }

    PointSet ps = prefix_sums(edges);
    for (size_t i = 0; i < ps.roles.size(); ++i)
        ps.roles[i] = (i % 2 == 0) ? Role::Inner : Role::Hull;
    return ps;
}

PointSet build_double_circle(int64_t n) { return translate_to_grid(build_double_circle_raw(n)); }

namespace {

// gcd for coprimality scans: table lookup while it fits the budget,
// plain Euclid beyond.
class GcdOracle {
public:
    explicit GcdOracle(int64_t bound) {
        if (bound <= GcdTable::max_bound) table_.emplace(bound);
    }
    int64_t operator()(int64_t i, int64_t j) const {
        return table_ ? table_->gcd(i, j) : std::gcd(i, j);
    }

private:
    std::optional<GcdTable> table_;
};

} // namespace

PointSet jarnik_polygon(int64_t q) {
    if (q < 1) throw std::invalid_argument("jarnik_polygon: q must be >= 1");
    GcdOracle gcd(q);

    VectorSequence v;
    v.vecs.reserve(8 * static_cast<size_t>(q));
    for (int64_t x = -q; x <= q; ++x)
        for (int64_t y = -q; y <= q; ++y) {
            if (x == 0 && y == 0) continue;
            if (gcd(checked_abs(x), checked_abs(y)) == 1) v.vecs.push_back({x, y});
        }

    PointSet ps = translate_to_grid(prefix_sums(radial_sort_bucket(v)));
    for (Role& r : ps.roles) r = Role::Hull;
    return ps;
}

JarnikSummary jarnik_counts(int64_t q) {
    if (q < 1) throw std::invalid_argument("jarnik_counts: q must be >= 1");
    GcdOracle gcd(q);

    int64_t pairs = 0, sum_i = 0;
    for (int64_t i = 1; i <= q; ++i)
        for (int64_t j = 1; j <= q; ++j)
            if (gcd(i, j) == 1) {
                pairs = checked_add(pairs, 1);
                sum_i = checked_add(sum_i, i);
            }

    JarnikSummary s;
    s.q = q;
    s.vertex_count = checked_add(4, checked_mul(4, pairs));
    s.size_s = checked_add(1, checked_mul(2, sum_i));
    return s;
}

PointSet quadratic_baseline(int64_t n) {
    if (n < 3) throw std::invalid_argument("quadratic_baseline: n must be >= 3");
    auto f = [](int64_t x) { return checked_add(checked_mul(x, x), x); };

    PointSet ps;
    ps.points.reserve(static_cast<size_t>(2 * n));
    ps.roles.reserve(static_cast<size_t>(2 * n));
    for (int64_t i = 1; i <= 2 * n - 1; ++i) {
        bool odd = (i % 2 != 0);
        ps.points.push_back({i, odd ? f(i) : checked_add(f(i), 2)});
        ps.roles.push_back(odd ? Role::Hull : Role::Inner);
    }
    // The point just below the midpoint of the chord from (1,f(1)) to
    // (2n-1, f(2n-1)).
    ps.points.push_back({n, checked_sub(checked_mul(2, checked_mul(n, n)), n)});
    ps.roles.push_back(Role::Inner);
    return ps;
}

PointSet naive_symmetric(int64_t n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("naive_symmetric: n must be even and >= 4");

    VectorSequence v;
    v.vecs.reserve(static_cast<size_t>(2 * n));
    for (int64_t i = 1; i <= n; ++i) v.vecs.push_back({1, i});
    for (int64_t i = 1; i <= n; ++i) v.vecs.push_back({-1, -i});
    v.sorted_ccw = true;

    PointSet ps = prefix_sums(alternate(v));
    for (size_t i = 0; i < ps.roles.size(); ++i)
        ps.roles[i] = (i % 2 == 0) ? Role::Inner : Role::Hull;
    return ps;
}

} // namespace dcgrid
