#pragma once

// Counting formulas behind the lower bounds on non-isomorphic 1/2-biased
// functions, and the kernel dimension of the hypercube adjacency matrix.

#include "rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

/// Partition numbers p(0..j).
inline std::vector<BigInt> partition_table(unsigned j)
{
    std::vector<BigInt> ways(j + 1, 0);
    ways[0] = 1;
    for (unsigned part = 1; part <= j; ++part)
        for (unsigned s = part; s <= j; ++s)
            ways[s] += ways[s - part];
    return ways;
}

inline BigInt count_partitions(unsigned j) { return partition_table(j)[j]; }

/// Non-negative integer solutions of a_1 + 2 a_2 + ... + k a_k <= k.
inline BigInt count_solutions_leq(unsigned k)
{
    // ways[s]: solutions with weighted sum exactly s, coins 1..k
    std::vector<BigInt> ways(k + 1, 0);
    ways[0] = 1;
    for (unsigned coin = 1; coin <= k; ++coin)
        for (unsigned s = coin; s <= k; ++s)
            ways[s] += ways[s - coin];
    BigInt total = 0;
    for (const auto & w : ways)
        total += w;
    return total;
}

inline unsigned isqrt(unsigned k)
{
    auto r = static_cast<unsigned>(std::sqrt(static_cast<double>(k)));
    while (r * r > k)
        --r;
    while ((r + 1) * (r + 1) <= k)
        ++r;
    return r;
}

struct HalfBiasedBound {
    unsigned k;       ///< floor(n/4)
    BigInt exact;     ///< solutions of 4a_1 + 8a_2 + ... + 4k a_k <= n
    BigInt binomial;  ///< C(2 floor(sqrt k), floor(sqrt k))
};

inline HalfBiasedBound half_biased_lower_bound(unsigned n)
{
    if (n < 4 || n % 2)
        throw std::invalid_argument("half_biased_lower_bound: n must be even and >= 4");
    const unsigned k = n / 4;
    const unsigned r = isqrt(k);
    // 4(a_1 + 2a_2 + ... + k a_k) <= n  <=>  a_1 + ... + k a_k <= floor(n/4)
    return {k, count_solutions_leq(k), binomial(2 * r, r)};
}

/// C(n, n/2): kernel dimension of the n-cube adjacency matrix for even n.
inline BigInt null_space_dimension(unsigned n)
{
    if (n % 2)
        throw std::invalid_argument("null_space_dimension: n must be even");
    return binomial(n, n / 2);
}

/// 2^n minus the exact rank of the n-cube adjacency matrix (fraction-free elimination).
inline unsigned adjacency_kernel_dimension(unsigned n)
{
    if (n < 1 || n > 8)
        throw std::out_of_range("adjacency_kernel_dimension: exact rank supported for 1 <= n <= 8");
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, 0));
    for (std::size_t v = 0; v < size; ++v)
        for (unsigned i = 0; i < n; ++i)
            a[v][v ^ (std::size_t{1} << i)] = 1;
    // Bareiss elimination with row swaps
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < size && rank < size; ++col) {
        std::size_t pivot = rank;
        while (pivot < size && a[pivot][col] == 0)
            ++pivot;
        if (pivot == size)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < size; ++r) {
            for (std::size_t c = col + 1; c < size; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<unsigned>(size - rank);
}

} // namespace lbf
