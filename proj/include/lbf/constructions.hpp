#pragma once

// Builders for locally biased and locally stable functions. Every builder
// checks its input with the matching verifier before constructing anything.

#include "codes.hpp"
#include "cube_function.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

namespace detail {

inline void require_half_biased(const CubeFunction & f, const char * who)
{
    auto p = is_locally_biased(f);
    if (!p || *p != make_rational(1, 2))
        throw std::invalid_argument(std::string(who) + ": input is not locally 1/2-biased");
}

// Perfect code on 2^k - 1 bits laid out with its k parity bits in the top
// coordinates. k = 0 and k = 1 give the trivial codes {empty word} and {0}.
inline BinaryCode parity_right_code(unsigned k)
{
    if (k == 0)
        return {0, {0}};
    if (k == 1)
        return {1, {0}};
    return rearrange_parity_right(hamming_code(k), k);
}

} // namespace detail

/// f(v) = +1 iff the first n-1 coordinates of v form a codeword of C.
inline CubeFunction biased_from_code(const BinaryCode & c)
{
    const unsigned n = c.length() + 1;
    check_dimension(n);
    if (!is_perfect_radius1(c))
        throw std::invalid_argument("biased_from_code: code is not a perfect radius-1 code");
    if (c.size() >= 2 && min_distance(c) < 3)
        throw std::invalid_argument("biased_from_code: code distance below 3");
    const std::uint32_t low = (std::uint32_t{1} << c.length()) - 1;
    return CubeFunction::from(n, [&](Vertex v) { return c.contains(v & low) ? 1 : -1; });
}

/// Union of m disjoint translates of the parity-right Hamming construction on
/// n = 2^k coordinates; translates use parity masks t = 0, ..., m-1.
inline CubeFunction biased_m_over_n(unsigned k, unsigned m)
{
    if (k > 4)
        throw std::out_of_range("biased_m_over_n: k must be at most 4 (n = 2^k <= 16)");
    const unsigned n = 1u << k;
    if (m > n)
        throw std::out_of_range("biased_m_over_n: m = " + std::to_string(m) + " exceeds n = " + std::to_string(n));
    if (m == 0)
        return CubeFunction::constant(n, -1);
    const auto base = detail::parity_right_code(k);
    std::vector<Sign> table(std::size_t{1} << n, -1);
    const std::uint32_t low = (std::uint32_t{1} << base.length()) - 1;
    std::vector<bool> in_support(std::size_t{1} << base.length(), false);
    for (std::uint32_t t = 0; t < m; ++t) {
        const auto translate = xor_translate(base, parity_translate_mask(k, t));
        for (auto w : translate.words()) {
            if (in_support[w])
                throw std::logic_error("biased_m_over_n: translates overlap");
            in_support[w] = true;
        }
    }
    for (Vertex v = 0; v < table.size(); ++v)
        if (in_support[v & low])
            table[v] = 1;
    return {n, std::move(table)};
}

/// f'(x) = f(prod_j x_{1+jn}, ..., prod_j x_{n+jn}) on cn coordinates.
inline CubeFunction tensor_lift(const CubeFunction & f, unsigned c, unsigned max_dimension = kMaxDimension)
{
    if (c < 1)
        throw std::invalid_argument("tensor_lift: c must be at least 1");
    const unsigned n = f.dimension();
    if (static_cast<std::uint64_t>(n) * c > max_dimension)
        throw std::out_of_range("tensor_lift: dimension " + std::to_string(std::uint64_t{n} * c) + " exceeds "
                                + std::to_string(max_dimension));
    const Vertex low = (Vertex{1} << n) - 1;
    return CubeFunction::from(n * c, [&](Vertex v) {
        Vertex y = 0;
        for (unsigned j = 0; j < c; ++j)
            y ^= (v >> (j * n)) & low;
        return f(y);
    });
}

/// f1 on the first n1 coordinates times f2 on the next n2; both must be 1/2-biased.
inline CubeFunction product(const CubeFunction & f1, const CubeFunction & f2)
{
    detail::require_half_biased(f1, "product");
    detail::require_half_biased(f2, "product");
    const unsigned n1 = f1.dimension();
    check_dimension(n1 + f2.dimension());
    const Vertex low = (Vertex{1} << n1) - 1;
    return CubeFunction::from(n1 + f2.dimension(), [&](Vertex v) { return f1(v & low) * f2(v >> n1); });
}

/// g_n = x_1 ... x_{n/2}.
inline CubeFunction parity_g(unsigned n)
{
    if (n < 2 || n % 2)
        throw std::invalid_argument("parity_g: n must be even and >= 2");
    const Vertex half = (Vertex{1} << (n / 2)) - 1;
    return CubeFunction::from(n, [&](Vertex v) { return character(half, v); });
}

/// h = (x1x2 + x2x3 - x3x4 + x1x4) / 2 on four coordinates.
inline CubeFunction base_h()
{
    return CubeFunction::from(4, [](Vertex v) {
        const int x1 = coordinate(v, 0), x2 = coordinate(v, 1), x3 = coordinate(v, 2), x4 = coordinate(v, 3);
        return (x1 * x2 + x2 * x3 - x3 * x4 + x1 * x4) / 2;
    });
}

/// h lifted to 4k coordinates; coordinate i of h reads prod_j x_{i+4j}.
inline CubeFunction h_k(unsigned k)
{
    if (k < 1)
        throw std::invalid_argument("h_k: k must be at least 1");
    return tensor_lift(base_h(), k);
}

/// Product of h_{i_1}, h_{i_2}, ... on consecutive blocks in argument order,
/// completed with g on the remaining coordinates.
inline CubeFunction half_biased_from_signature(unsigned n, const std::vector<unsigned> & signature)
{
    if (n < 2 || n % 2)
        throw std::invalid_argument("half_biased_from_signature: n must be even and >= 2");
    std::uint64_t used = 0;
    for (auto i : signature) {
        if (i < 1)
            throw std::invalid_argument("half_biased_from_signature: entries must be >= 1");
        used += 4ull * i;
    }
    if (used > n)
        throw std::invalid_argument("half_biased_from_signature: signature needs " + std::to_string(used)
                                    + " coordinates, only " + std::to_string(n) + " available");
    check_dimension(n);
    std::optional<CubeFunction> acc;
    for (auto i : signature)
        acc = acc ? product(*acc, h_k(i)) : h_k(i);
    if (used < n)
        acc = acc ? product(*acc, parity_g(n - static_cast<unsigned>(used))) : parity_g(n);
    return *acc;
}

/// Parity on the last n - m coordinates, x_{m+1} ... x_n; locally m/n-stable.
inline CubeFunction stable_parity(unsigned n, unsigned m)
{
    check_dimension(n);
    if (m > n)
        throw std::out_of_range("stable_parity: m exceeds n");
    const Vertex mask = ((Vertex{1} << n) - 1) & ~((Vertex{1} << m) - 1);
    return CubeFunction::from(n, [&](Vertex v) { return character(mask, v); });
}

/// f'(x) = f(x_1..x_n) x_{n+1}; 1/2-biased f gives an (n/2)/(n+1)-stable function.
inline CubeFunction stable_from_biased(const CubeFunction & f)
{
    detail::require_half_biased(f, "stable_from_biased");
    const unsigned n = f.dimension();
    check_dimension(n + 1);
    const Vertex low = (Vertex{1} << n) - 1;
    return CubeFunction::from(n + 1, [&](Vertex v) { return f(v & low) * coordinate(v, n); });
}

/// Ignores all but the first n coordinates on an n'-cube.
inline CubeFunction stable_extend(const CubeFunction & f, unsigned target_dimension)
{
    if (!is_locally_stable(f))
        throw std::invalid_argument("stable_extend: input is not locally stable");
    const unsigned n = f.dimension();
    if (target_dimension < n)
        throw std::invalid_argument("stable_extend: target dimension below input dimension");
    check_dimension(target_dimension);
    const Vertex low = (Vertex{1} << n) - 1;
    return CubeFunction::from(target_dimension, [&](Vertex v) { return f(v & low); });
}

/// A locally p-biased function on n coordinates whenever one exists:
/// p = b/2^k with 2^k | n, built as biased_m_over_n(k, b) lifted n/2^k times.
inline CubeFunction build_locally_biased(unsigned n, const Rational & p)
{
    check_dimension(n);
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (p < 0 || p > 1)
        throw std::invalid_argument("build_locally_biased: p outside [0, 1]");
    const BigInt den = denominator(p);
    if (den > n || (den & (den - 1)) != 0 || n % den.convert_to<unsigned>() != 0)
        throw std::invalid_argument("build_locally_biased: no locally " + to_string(p) + "-biased function exists for n = "
                                    + std::to_string(n));
    const unsigned d = den.convert_to<unsigned>();
    const unsigned k = static_cast<unsigned>(std::countr_zero(d));
    return tensor_lift(biased_m_over_n(k, numerator(p).convert_to<unsigned>()), n / d);
}

} // namespace lbf
