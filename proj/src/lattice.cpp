#include "lattice.hpp"

namespace dcgrid {

GcdTable::GcdTable(int64_t bound) {
    if (bound < 1) throw std::invalid_argument("GcdTable: bound must be >= 1");
    if (bound > max_bound) throw std::length_error("GcdTable: bound exceeds memory budget");
    bound_ = bound;
    stride_ = static_cast<size_t>(bound + 1);
    entries_.assign(stride_ * stride_, 0);

    auto at = [&](int64_t i, int64_t j) -> std::uint32_t& {
        return entries_[static_cast<size_t>(i) * stride_ + static_cast<size_t>(j)];
    };

    // Fill by increasing i+j: gcd(0,k) = gcd(k,0) = k, gcd(i,i) = i, and
    // gcd(i,j) = gcd(i-j,j) for i > j, whose cell has a smaller sum.
    for (int64_t s = 0; s <= 2 * bound; ++s) {
        int64_t lo = s > bound ? s - bound : 0;
        int64_t hi = s < bound ? s : bound;
        for (int64_t i = lo; i <= hi; ++i) {
            int64_t j = s - i;
            std::uint32_t g;
            if (i == 0)
                g = static_cast<std::uint32_t>(j);
            else if (j == 0)
                g = static_cast<std::uint32_t>(i);
            else if (i == j)
                g = static_cast<std::uint32_t>(i);
            else if (i > j)
                g = at(i - j, j);
            else
                g = at(i, j - i);
            at(i, j) = g;
        }
    }
}

} // namespace dcgrid
