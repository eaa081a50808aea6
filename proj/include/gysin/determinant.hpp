#pragma once

// Division-free determinants over commutative rings that need not be integral
// domains (truncated rings, Laurent polynomials over them).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gysin {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Laplace expansion along rows, memoised over the set of used columns:
/// partial[mask] is the signed sum over all ways of assigning the first
/// popcount(mask) rows to the columns in mask. O(2^d * d) ring operations.
///
/// `zero` and `one` fix the ring of the result (entries may carry a ring
/// descriptor); `one` is returned for the empty matrix.
template <typename T>
T determinant(const Matrix<T>& m, const T& zero, const T& one) {
    const std::size_t d = m.size();
    for (const auto& row : m)
        if (row.size() != d)
            throw std::invalid_argument("determinant of a non-square matrix");
    if (d == 0)
        return one;
    if (d > 24)
        throw std::invalid_argument("determinant: matrix too large for subset expansion");

    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    std::vector<T> partial(std::size_t{full} + 1, zero);
    std::vector<bool> live(std::size_t{full} + 1, false);
    live[0] = true;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!live[mask])
            continue;
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t col = 0; col < d; ++col) {
            const std::uint32_t bit = std::uint32_t{1} << col;
            if (mask & bit)
                continue;
            // Sign of moving column `col` past the already used columns to its right.
            const int above = std::popcount(mask >> (col + 1));
            T contribution = (mask == 0) ? m[row][col] : partial[mask] * m[row][col];
            if (above % 2 == 1)
                contribution = -contribution;
            partial[mask | bit] += contribution;
            live[mask | bit] = true;
        }
    }
    return partial[full];
}

} // namespace gysin
