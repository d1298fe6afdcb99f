#pragma once

// Random-walk sceneries on the hypercube and their exact laws.
//
// The walk is simple (each step flips one of the n coordinates uniformly) and
// starts from the uniform distribution. Exact laws are computed by a
// depth-first pass over sign-word prefixes: for each prefix we keep the number
// of (start, step sequence) pairs ending at each vertex, so every probability
// is an integer over 2^n * n^L.

#include "cube_function.hpp"
#include "random.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

/// A word over {+,-}; character i is the i-th observed sign.
using SignWord = std::string;

struct Walk {
    unsigned n;
    std::vector<Vertex> vertices;

    bool valid() const
    {
        for (std::size_t i = 1; i < vertices.size(); ++i)
            if (std::popcount(vertices[i] ^ vertices[i - 1]) != 1 || vertices[i] >= (Vertex{1} << n))
                return false;
        return vertices.empty() || vertices.front() < (Vertex{1} << n);
    }
};

struct SceneryDistribution {
    /// Number of signs in each word.
    unsigned length = 0;
    /// Words with nonzero probability only, in lexicographic order ('+' < '-').
    std::map<SignWord, Rational> probs;

    Rational total() const
    {
        Rational t = 0;
        for (const auto & [w, p] : probs)
            t += p;
        return t;
    }

    Rational probability(const SignWord & w) const
    {
        auto it = probs.find(w);
        return it == probs.end() ? Rational(0) : it->second;
    }
};

struct SceneryLimits {
    unsigned max_dimension = 12;
    unsigned max_steps = 12;
};

inline char sign_char(int s) { return s > 0 ? '+' : '-'; }

/// Walk of `steps` steps (steps + 1 vertices); start drawn uniformly when unset.
inline Walk random_walk(unsigned n, unsigned steps, std::uint64_t seed, std::optional<Vertex> start = std::nullopt,
                        std::uint64_t stream = 0)
{
    check_dimension(n);
    CounterRng rng(seed, stream);
    Walk w{n, {}};
    w.vertices.reserve(steps + 1);
    if (start && *start >= (Vertex{1} << n))
        throw std::out_of_range("start vertex out of range");
    Vertex v = start ? *start : static_cast<Vertex>(rng.below(std::uint64_t{1} << n));
    w.vertices.push_back(v);
    for (unsigned i = 0; i < steps; ++i) {
        v ^= Vertex{1} << rng.below(n);
        w.vertices.push_back(v);
    }
    return w;
}

inline std::vector<Sign> scenery(const CubeFunction & f, const Walk & w)
{
    if (w.n != f.dimension())
        throw std::invalid_argument("walk dimension does not match function dimension");
    std::vector<Sign> out;
    out.reserve(w.vertices.size());
    for (auto v : w.vertices)
        out.push_back(static_cast<Sign>(f.at(v)));
    return out;
}

inline SignWord to_word(const std::vector<Sign> & signs)
{
    SignWord w;
    w.reserve(signs.size());
    for (auto s : signs)
        w.push_back(sign_char(s));
    return w;
}

namespace detail {

inline void check_scenery_limits(const CubeFunction & f, unsigned steps, const SceneryLimits & limits)
{
    const unsigned n = f.dimension();
    if (n > limits.max_dimension || steps > limits.max_steps)
        throw std::out_of_range("exact scenery law limited to n <= " + std::to_string(limits.max_dimension)
                                + " and L <= " + std::to_string(limits.max_steps));
    // path counts are held in 64 bits
    if (BigInt(1) << n > (BigInt(1) << 63) / boost::multiprecision::pow(BigInt(n), steps))
        throw std::out_of_range("exact scenery law: 2^n * n^L does not fit in 64 bits");
}

// Depth-first expansion of word prefixes. `step` maps the current vertex
// weights and the next sign to the new weights.
template <typename Step>
void expand_words(std::vector<std::uint64_t> & weights, SignWord & prefix, unsigned length, const Rational & scale,
                  Step & step, std::map<SignWord, Rational> & out)
{
    if (prefix.size() == length) {
        std::uint64_t mass = 0;
        for (auto w : weights)
            mass += w;
        if (mass)
            out.emplace(prefix, Rational(mass) / scale);
        return;
    }
    std::vector<std::uint64_t> next(weights.size());
    for (int s : {1, -1}) {
        if (!step(weights, s, next))
            continue;
        prefix.push_back(sign_char(s));
        expand_words(next, prefix, length, scale, step, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Exact law of (f(S_0), ..., f(S_L)) for the uniform-start simple walk.
inline SceneryDistribution exact_scenery_distribution(const CubeFunction & f, unsigned steps,
                                                      const SceneryLimits & limits = {})
{
    detail::check_scenery_limits(f, steps, limits);
    const unsigned n = f.dimension();
    const Rational scale = Rational(BigInt((BigInt(1) << n) * boost::multiprecision::pow(BigInt(n), steps)));
    SceneryDistribution d{steps + 1, {}};
    auto step = [&](const std::vector<std::uint64_t> & cur, int s, std::vector<std::uint64_t> & next) {
        bool any = false;
        for (Vertex y = 0; y < next.size(); ++y) {
            std::uint64_t acc = 0;
            if (f(y) == s)
                for (unsigned i = 0; i < n; ++i)
                    acc += cur[y ^ (Vertex{1} << i)];
            next[y] = acc;
            any |= acc != 0;
        }
        return any;
    };
    SignWord prefix;
    for (int s : {1, -1}) {
        std::vector<std::uint64_t> start(f.size());
        bool any = false;
        for (Vertex v = 0; v < f.size(); ++v)
            if (f(v) == s) {
                start[v] = 1;
                any = true;
            }
        if (!any)
            continue;
        prefix.assign(1, sign_char(s));
        detail::expand_words(start, prefix, steps + 1, scale, step, d.probs);
    }
    return d;
}

/// Exact law of (f(S_0)f(S_1), ..., f(S_{L-1})f(S_L)) for the uniform-start walk.
inline SceneryDistribution stability_pair_distribution(const CubeFunction & f, unsigned steps,
                                                       const SceneryLimits & limits = {})
{
    detail::check_scenery_limits(f, steps, limits);
    const unsigned n = f.dimension();
    const Rational scale = Rational(BigInt((BigInt(1) << n) * boost::multiprecision::pow(BigInt(n), steps)));
    SceneryDistribution d{steps, {}};
    auto step = [&](const std::vector<std::uint64_t> & cur, int s, std::vector<std::uint64_t> & next) {
        bool any = false;
        for (Vertex y = 0; y < next.size(); ++y) {
            std::uint64_t acc = 0;
            for (unsigned i = 0; i < n; ++i) {
                const Vertex u = y ^ (Vertex{1} << i);
                if (f(u) * f(y) == s)
                    acc += cur[u];
            }
            next[y] = acc;
            any |= acc != 0;
        }
        return any;
    };
    std::vector<std::uint64_t> start(f.size(), 1);
    SignWord prefix;
    detail::expand_words(start, prefix, steps, scale, step, d.probs);
    return d;
}

/// Product law of `length` independent signs with P(+) = p.
inline SceneryDistribution bernoulli_product(const Rational & p, unsigned length)
{
    if (p < 0 || p > 1)
        throw std::invalid_argument("bernoulli_product: p outside [0, 1]");
    if (length > 24)
        throw std::out_of_range("bernoulli_product: length above 24");
    SceneryDistribution d{length, {}};
    const Rational q = 1 - p;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << length); ++bits) {
        SignWord w(length, '+');
        Rational prob = 1;
        // first character is the most significant bit so bits ascend lexicographically
        for (unsigned i = 0; i < length; ++i) {
            const bool minus = (bits >> (length - 1 - i)) & 1u;
            w[i] = minus ? '-' : '+';
            prob *= minus ? q : p;
        }
        if (prob != 0)
            d.probs.emplace(std::move(w), prob);
    }
    return d;
}

inline bool distributions_equal(const SceneryDistribution & a, const SceneryDistribution & b)
{
    if (a.length != b.length)
        throw std::invalid_argument("comparing scenery laws of word lengths " + std::to_string(a.length) + " and "
                                    + std::to_string(b.length));
    return a.probs == b.probs;
}

/// Empirical word counts of `samples` independent uniform-start walks; walk i uses stream i.
inline std::map<SignWord, std::uint64_t> sample_scenery_counts(const CubeFunction & f, unsigned steps,
                                                               std::uint64_t samples, std::uint64_t seed)
{
    std::map<SignWord, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < samples; ++i)
        ++counts[to_word(scenery(f, random_walk(f.dimension(), steps, seed, std::nullopt, i)))];
    return counts;
}

struct ChiSquareReport {
    double statistic = 0;
    unsigned degrees_of_freedom = 0;
    std::uint64_t total = 0;
    /// Observed words that have probability 0 under the reference.
    std::vector<SignWord> incompatible;
};

inline ChiSquareReport chi_square_report(const std::map<SignWord, std::uint64_t> & counts,
                                         const SceneryDistribution & reference)
{
    ChiSquareReport r;
    for (const auto & [w, c] : counts) {
        if (w.size() != reference.length)
            throw std::invalid_argument("observed word '" + w + "' has the wrong length");
        r.total += c;
        if (c > 0 && !reference.probs.contains(w))
            r.incompatible.push_back(w);
    }
    if (r.total == 0)
        throw std::invalid_argument("chi_square_report: no observations");
    for (const auto & [w, p] : reference.probs) {
        const double expected = static_cast<double>(r.total) * p.convert_to<double>();
        auto it = counts.find(w);
        const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        r.statistic += (observed - expected) * (observed - expected) / expected;
    }
    r.degrees_of_freedom = reference.probs.empty() ? 0 : static_cast<unsigned>(reference.probs.size() - 1);
    return r;
}

} // namespace lbf
