#pragma once

// Hypercube automorphisms psi(v) = P(v xor F): first the coordinates in the
// flip mask F are negated, then coordinate i is moved to position perm[i].
//
// Composition convention: compose(a, b) is the automorphism psi_a o psi_b,
// so that apply(apply(f, a), b) == apply(f, compose(a, b)).

#include "cube_function.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

struct CubeAutomorphism {
    /// 0-based; coordinate i of the (flipped) input becomes coordinate perm[i].
    std::vector<std::uint8_t> perm;
    /// Bit i set: coordinate i is negated before permuting.
    std::uint32_t flips = 0;

    static CubeAutomorphism identity(unsigned n)
    {
        CubeAutomorphism a;
        a.perm.resize(n);
        std::iota(a.perm.begin(), a.perm.end(), std::uint8_t{0});
        return a;
    }

    unsigned dimension() const noexcept { return static_cast<unsigned>(perm.size()); }

    bool valid() const
    {
        std::vector<bool> seen(perm.size(), false);
        for (auto p : perm) {
            if (p >= perm.size() || seen[p])
                return false;
            seen[p] = true;
        }
        return perm.size() >= 32 || (flips >> perm.size()) == 0;
    }

    Vertex operator()(Vertex v) const
    {
        const Vertex w = v ^ flips;
        Vertex out = 0;
        for (unsigned i = 0; i < perm.size(); ++i)
            out |= ((w >> i) & 1u) << perm[i];
        return out;
    }

    friend bool operator==(const CubeAutomorphism &, const CubeAutomorphism &) = default;
};

inline CubeAutomorphism compose(const CubeAutomorphism & a, const CubeAutomorphism & b)
{
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("composing automorphisms of different dimensions");
    CubeAutomorphism c;
    c.perm.resize(a.dimension());
    std::uint32_t pulled = 0; // P_b^{-1}(F_a)
    for (unsigned i = 0; i < a.dimension(); ++i) {
        c.perm[i] = a.perm[b.perm[i]];
        pulled |= ((a.flips >> b.perm[i]) & 1u) << i;
    }
    c.flips = b.flips ^ pulled;
    return c;
}

inline CubeAutomorphism inverse(const CubeAutomorphism & a)
{
    CubeAutomorphism inv;
    inv.perm.resize(a.dimension());
    for (unsigned i = 0; i < a.dimension(); ++i)
        inv.perm[a.perm[i]] = static_cast<std::uint8_t>(i);
    // psi^{-1}(u) = P^{-1}(u) xor F = P^{-1}(u xor P(F))
    Vertex moved = 0;
    for (unsigned i = 0; i < a.dimension(); ++i)
        moved |= ((a.flips >> i) & 1u) << a.perm[i];
    inv.flips = moved;
    return inv;
}

/// Returns f o psi.
inline CubeFunction apply_automorphism(const CubeFunction & f, const CubeAutomorphism & a)
{
    if (a.dimension() != f.dimension())
        throw std::invalid_argument("automorphism dimension " + std::to_string(a.dimension())
                                    + " does not match function dimension " + std::to_string(f.dimension()));
    if (!a.valid())
        throw std::invalid_argument("automorphism permutation is not a bijection");
    std::vector<Sign> table(f.size());
    for (Vertex v = 0; v < f.size(); ++v)
        table[v] = static_cast<Sign>(f(a(v)));
    return {f.dimension(), std::move(table)};
}

/// Calls visit(automorphism) for all n! * 2^n automorphisms in a fixed order
/// (permutations lexicographic, flips ascending). Stops early when visit returns false.
template <typename Visit>
bool for_each_automorphism(unsigned n, Visit && visit)
{
    auto a = CubeAutomorphism::identity(n);
    do {
        for (std::uint32_t flips = 0; flips < (std::uint32_t{1} << n); ++flips) {
            a.flips = flips;
            if (!visit(static_cast<const CubeAutomorphism &>(a)))
                return false;
        }
    } while (std::next_permutation(a.perm.begin(), a.perm.end()));
    return true;
}

inline std::uint64_t automorphism_count(unsigned n)
{
    std::uint64_t c = std::uint64_t{1} << n;
    for (unsigned i = 2; i <= n; ++i)
        c *= i;
    return c;
}

/// Largest n whose full vertex-map table is cached.
inline constexpr unsigned kCachedGroupBound = 5;

/// maps[k][v] = psi_k(v) for the k-th automorphism in for_each_automorphism order.
inline const std::vector<std::vector<Vertex>> & automorphism_vertex_maps(unsigned n)
{
    if (n < 1 || n > kCachedGroupBound)
        throw std::out_of_range("automorphism table cached only for n <= " + std::to_string(kCachedGroupBound));
    static std::array<std::once_flag, kCachedGroupBound + 1> once;
    static std::array<std::vector<std::vector<Vertex>>, kCachedGroupBound + 1> tables;
    std::call_once(once[n], [n] {
        auto & t = tables[n];
        t.reserve(automorphism_count(n));
        for_each_automorphism(n, [&](const CubeAutomorphism & a) {
            std::vector<Vertex> map(std::size_t{1} << n);
            for (Vertex v = 0; v < map.size(); ++v)
                map[v] = a(v);
            t.push_back(std::move(map));
            return true;
        });
    });
    return tables[n];
}

} // namespace lbf
