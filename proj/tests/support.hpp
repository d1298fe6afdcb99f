#pragma once

// Brute-force oracles and random generators shared by the test binaries.
// Everything here is deliberately naive so it can check the library code.

#include <lbf/lbf.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lbf::test {

inline CubeFunction random_function(unsigned n, CounterRng & rng)
{
    return CubeFunction::from(n, [&](Vertex) { return rng.below(2) ? 1 : -1; });
}

inline CubeAutomorphism random_automorphism(unsigned n, CounterRng & rng)
{
    auto a = CubeAutomorphism::identity(n);
    for (unsigned i = n; i > 1; --i)
        std::swap(a.perm[i - 1], a.perm[rng.below(i)]);
    a.flips = n ? static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n)) : 0;
    return a;
}

// Counts +1 neighbors by evaluating f on explicit ±1 coordinate vectors.
inline std::optional<Rational> naive_bias(const CubeFunction & f, bool stability)
{
    const unsigned n = f.dimension();
    std::optional<unsigned> common;
    for (Vertex v = 0; v < f.size(); ++v) {
        unsigned c = 0;
        for (unsigned i = 0; i < n; ++i) {
            const Vertex u = v ^ (Vertex{1} << i);
            c += stability ? f(u) == f(v) : f(u) == 1;
        }
        if (common && *common != c)
            return std::nullopt;
        common = c;
    }
    return make_rational(*common, n);
}

// Scenery law by summing over every start vertex and every step sequence.
inline std::map<std::string, Rational> path_sum_law(const CubeFunction & f, unsigned steps, bool pairs)
{
    const unsigned n = f.dimension();
    std::map<std::string, BigInt> counts;
    std::uint64_t sequences = 1;
    for (unsigned i = 0; i < steps; ++i)
        sequences *= n;
    for (Vertex start = 0; start < f.size(); ++start)
        for (std::uint64_t code = 0; code < sequences; ++code) {
            std::string word;
            Vertex v = start;
            std::uint64_t c = code;
            if (!pairs)
                word += f(v) > 0 ? '+' : '-';
            for (unsigned s = 0; s < steps; ++s) {
                const Vertex u = v ^ (Vertex{1} << (c % n));
                c /= n;
                word += pairs ? (f(u) * f(v) > 0 ? '+' : '-') : (f(u) > 0 ? '+' : '-');
                v = u;
            }
            ++counts[word];
        }
    std::map<std::string, Rational> law;
    const BigInt total = BigInt(f.size()) * sequences;
    for (auto & [w, c] : counts)
        law.emplace(w, make_rational(c, total));
    return law;
}

// Partitions of j by explicit enumeration of non-increasing part sequences.
inline std::uint64_t brute_partitions(unsigned j, unsigned largest)
{
    if (j == 0)
        return 1;
    std::uint64_t total = 0;
    for (unsigned part = std::min(j, largest); part >= 1; --part)
        total += brute_partitions(j - part, part);
    return total;
}

inline CubeFunction table(unsigned n, const std::string & signs)
{
    std::vector<Sign> t;
    for (char c : signs)
        t.push_back(c == '+' ? 1 : -1);
    return {n, t};
}

} // namespace lbf::test
