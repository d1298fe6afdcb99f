#pragma once

// Exact Walsh spectrum. Coefficients are kept at integer scale:
//   c_S = sum_v f(v) chi_S(v),   fhat_S = c_S / 2^n.

#include "cube_function.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace lbf {

struct WalshSpectrum {
    unsigned n;
    /// coeffs[S] for every subset mask S in [0, 2^n).
    std::vector<std::int64_t> coeffs;

    std::int64_t operator[](std::uint32_t subset) const { return coeffs[subset]; }

    std::size_t support_size() const
    {
        return static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; }));
    }

    friend bool operator==(const WalshSpectrum &, const WalshSpectrum &) = default;
};

namespace detail {

// In-place unnormalized fast Walsh-Hadamard butterfly.
inline void fwht(std::vector<std::int64_t> & a)
{
    for (std::size_t h = 1; h < a.size(); h <<= 1)
        for (std::size_t i = 0; i < a.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                const auto x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
}

} // namespace detail

inline WalshSpectrum walsh_transform(const CubeFunction & f)
{
    std::vector<std::int64_t> a(f.table().begin(), f.table().end());
    detail::fwht(a);
    return {f.dimension(), std::move(a)};
}

/// Throws std::domain_error when the spectrum does not describe a +-1 function.
inline CubeFunction walsh_inverse(const WalshSpectrum & spec)
{
    check_dimension(spec.n);
    if (spec.coeffs.size() != (std::size_t{1} << spec.n))
        throw std::invalid_argument("spectrum size does not match dimension");
    auto a = spec.coeffs;
    detail::fwht(a);
    const std::int64_t scale = std::int64_t{1} << spec.n;
    std::vector<Sign> table(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] == scale)
            table[v] = 1;
        else if (a[v] == -scale)
            table[v] = -1;
        else
            throw std::domain_error("spectrum is not Boolean: value at vertex " + std::to_string(v)
                                    + " is " + std::to_string(a[v]) + "/" + std::to_string(scale));
    }
    return {spec.n, std::move(table)};
}

/// Sum of fhat_S^2 over |S| = d, exactly.
inline Rational degree_weight(const WalshSpectrum & spec, unsigned d)
{
    if (d > spec.n)
        throw std::out_of_range("degree " + std::to_string(d) + " exceeds dimension " + std::to_string(spec.n));
    BigInt total = 0;
    for (std::uint32_t s = 0; s < spec.coeffs.size(); ++s)
        if (static_cast<unsigned>(std::popcount(s)) == d)
            total += BigInt(spec.coeffs[s]) * spec.coeffs[s];
    return make_rational(total, BigInt(1) << (2 * spec.n));
}

/// Sorted |c_S| values of each degree; an isomorphism invariant.
inline std::vector<std::vector<std::int64_t>> degree_magnitudes(const WalshSpectrum & spec)
{
    std::vector<std::vector<std::int64_t>> out(spec.n + 1);
    for (std::uint32_t s = 0; s < spec.coeffs.size(); ++s)
        if (spec.coeffs[s] != 0)
            out[std::popcount(s)].push_back(spec.coeffs[s] < 0 ? -spec.coeffs[s] : spec.coeffs[s]);
    for (auto & v : out)
        std::sort(v.begin(), v.end());
    return out;
}

} // namespace lbf
