#pragma once

#include <cstddef>
#include <vector>

namespace hosc {

// Multi-index nu in N_0^n labelling a tensor Hermite function.  The spectral
// level of nu is 2|nu| + n, i.e. the oscillator eigenvalue of phi_nu.
struct MultiIndex {
    std::vector<int> entries;

    int dimension() const { return static_cast<int>(entries.size()); }

    // |nu| = nu_1 + ... + nu_n
    int order() const;

    // 2|nu| + n
    int level() const;

    bool operator==(const MultiIndex&) const = default;
};

// All multi-indices of the given spectral level in dimension n, sorted
// lexicographically.  Empty when level and n have different parity or
// level < n.
std::vector<MultiIndex> enumerate_level(int level, int dimension);

// All multi-indices with level <= max_level, grouped by ascending level and
// lexicographic within each level.  This ordering is the canonical
// coefficient layout used throughout: coefficient i of a field belongs to
// enumerate_up_to(L, n)[i].
std::vector<MultiIndex> enumerate_up_to(int max_level, int dimension);

// Number of multi-indices with |nu| = k in dimension n: C(k + n - 1, n - 1).
std::size_t order_count(int k, int dimension);

// Number of multi-indices of the given spectral level (0 if parity excludes it).
std::size_t level_count(int level, int dimension);

// Spectral levels present below a cutoff: n, n+2, ..., <= max_level.
std::vector<int> levels_up_to(int max_level, int dimension);

} // namespace hosc
