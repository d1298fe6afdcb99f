#pragma once

// Periodic colorings of the Cayley graph of Z with generator set S: x is
// adjacent to x + s and x - s for every s in S.

#include "cube_function.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

struct CayleyZFunction {
    std::vector<unsigned> generators; ///< distinct, positive, ascending
    std::vector<Sign> pattern;        ///< f(x) = pattern[x mod P]

    CayleyZFunction(std::vector<unsigned> gens, std::vector<Sign> pat) : generators(std::move(gens)), pattern(std::move(pat))
    {
        std::sort(generators.begin(), generators.end());
        if (generators.empty())
            throw std::invalid_argument("Cayley graph needs at least one generator");
        if (generators.front() == 0)
            throw std::invalid_argument("generators must be positive");
        if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
            throw std::invalid_argument("generators must be distinct");
        if (pattern.empty())
            throw std::invalid_argument("pattern period must be at least 1");
        for (auto s : pattern)
            if (s != 1 && s != -1)
                throw std::invalid_argument("pattern entry is not +1 or -1");
    }

    unsigned period() const noexcept { return static_cast<unsigned>(pattern.size()); }

    int operator()(std::int64_t x) const
    {
        const auto p = static_cast<std::int64_t>(pattern.size());
        return pattern[static_cast<std::size_t>(((x % p) + p) % p)];
    }

    friend bool operator==(const CayleyZFunction &, const CayleyZFunction &) = default;
};

inline std::string pattern_string(const std::vector<Sign> & pattern)
{
    std::string s;
    for (auto v : pattern)
        s.push_back(v > 0 ? '+' : '-');
    return s;
}

inline std::optional<Rational> verify_cayley_bias(const CayleyZFunction & f)
{
    std::optional<unsigned> common;
    for (std::int64_t r = 0; r < f.period(); ++r) {
        unsigned plus = 0;
        for (auto s : f.generators)
            plus += (f(r + s) == 1) + (f(r - static_cast<std::int64_t>(s)) == 1);
        if (common && *common != plus)
            return std::nullopt;
        common = plus;
    }
    return make_rational(*common, 2 * f.generators.size());
}

/// Period 2(a+b): +1 on [0, a+b), -1 on [a+b, 2(a+b)).
inline CayleyZFunction cayley_half_biased(unsigned a, unsigned b)
{
    if (a <= 1 || b <= 1 || a == b)
        throw std::invalid_argument("cayley_half_biased: need distinct a, b > 1");
    std::vector<Sign> pattern(2 * (a + b), -1);
    std::fill(pattern.begin(), pattern.begin() + (a + b), Sign{1});
    CayleyZFunction f({a, b}, std::move(pattern));
    if (verify_cayley_bias(f) != make_rational(1, 2))
        throw std::logic_error("cayley_half_biased: result is not locally 1/2-biased");
    return f;
}

/// Shortest d with pattern[i] == pattern[i mod d] for all i.
inline unsigned primitive_period(const std::vector<Sign> & pattern)
{
    const auto p = pattern.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d)
            continue;
        bool ok = true;
        for (std::size_t i = d; i < p && ok; ++i)
            ok = pattern[i] == pattern[i - d];
        if (ok)
            return static_cast<unsigned>(d);
    }
    return static_cast<unsigned>(p);
}

/// Class representative under translation, reflection x -> -x, and reduction
/// to the primitive period: the lexicographically smallest string ('+' < '-').
inline std::vector<Sign> canonical_pattern(const std::vector<Sign> & pattern)
{
    const std::vector<Sign> base(pattern.begin(), pattern.begin() + primitive_period(pattern));
    const std::size_t p = base.size();
    std::string best;
    std::vector<Sign> best_pattern;
    std::vector<Sign> cand(p);
    for (int reflect = 0; reflect < 2; ++reflect)
        for (std::size_t shift = 0; shift < p; ++shift) {
            for (std::size_t i = 0; i < p; ++i) {
                const std::size_t src = reflect ? (p - i % p + shift) % p : (i + shift) % p;
                cand[i] = base[src];
            }
            auto s = pattern_string(cand);
            if (best.empty() || s < best) {
                best = std::move(s);
                best_pattern = cand;
            }
        }
    return best_pattern;
}

inline constexpr unsigned kMaxCayleyPeriod = 24;

struct CayleySearchResult {
    std::vector<CayleyZFunction> classes; ///< sorted by (period, pattern string)
    unsigned max_period;
    std::uint64_t patterns_checked = 0;
};

/// All locally p-biased periodic colorings of Cayley(Z, S) with period <= max_period,
/// one representative per class.
inline CayleySearchResult search_cayley(std::vector<unsigned> generators, unsigned max_period, const Rational & p)
{
    if (max_period < 1 || max_period > kMaxCayleyPeriod)
        throw std::out_of_range("search_cayley: max period must be in [1, " + std::to_string(kMaxCayleyPeriod) + "]");
    CayleyZFunction probe(generators, {1}); // validates the generator set
    generators = probe.generators;
    CayleySearchResult result{{}, max_period, 0};

    const Rational target_r = p * (2 * static_cast<unsigned>(generators.size()));
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (p < 0 || p > 1 || denominator(target_r) != 1)
        return result;
    const unsigned target = numerator(target_r).convert_to<unsigned>();

    std::set<std::pair<unsigned, std::string>> seen;
    for (unsigned period = 1; period <= max_period; ++period) {
        // neighbor residues of each r
        std::vector<std::vector<unsigned>> nbrs(period);
        for (unsigned r = 0; r < period; ++r)
            for (auto s : generators) {
                nbrs[r].push_back((r + s) % period);
                nbrs[r].push_back(static_cast<unsigned>((r + period - s % period) % period));
            }
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << period); ++bits) {
            ++result.patterns_checked;
            // bit r set <=> f(r) = +1
            bool ok = true;
            for (unsigned r = 0; r < period && ok; ++r) {
                unsigned plus = 0;
                for (auto y : nbrs[r])
                    plus += (bits >> y) & 1u;
                ok = plus == target;
            }
            if (!ok)
                continue;
            std::vector<Sign> pattern(period);
            for (unsigned r = 0; r < period; ++r)
                pattern[r] = ((bits >> r) & 1u) ? 1 : -1;
            if (primitive_period(pattern) != period)
                continue;
            auto canon = canonical_pattern(pattern);
            if (seen.emplace(period, pattern_string(canon)).second)
                result.classes.emplace_back(generators, std::move(canon));
        }
    }
    std::sort(result.classes.begin(), result.classes.end(), [](const auto & a, const auto & b) {
        return std::pair(a.period(), pattern_string(a.pattern)) < std::pair(b.period(), pattern_string(b.pattern));
    });
    return result;
}

} // namespace lbf
