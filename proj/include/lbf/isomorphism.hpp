#pragma once

// Isomorphism of cube functions under the hyperoctahedral group.
//
// Small dimensions (n <= exact_bound) are decided by scanning the whole group.
// Above the bound we first compare invariants and, if they all agree, search
// over coordinate permutations. Under psi(v) = P(v xor F) the spectrum moves as
//     c^{f o psi}_S = (-1)^{|S & F|} c^f_{P(S)},
// so permutations are pruned on |c_S| and the flip mask is recovered at each
// leaf by solving a GF(2) system built from the coefficient signs.

#include "automorphism.hpp"
#include "walsh.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lbf {

struct IsomorphismOptions {
    unsigned exact_bound = 5;
    std::uint64_t node_budget = 5'000'000;
};

enum class Verdict { isomorphic, non_isomorphic, unknown };

struct IsomorphismResult {
    Verdict verdict;
    /// Set when isomorphic: apply_automorphism(f, *witness) == g.
    std::optional<CubeAutomorphism> witness;
    /// Human-readable reason; for non_isomorphic this names the differing invariant.
    std::string certificate;
    std::uint64_t nodes = 0;
};

namespace detail {

inline std::map<unsigned, std::size_t> histogram(const LocalProfile & p)
{
    std::map<unsigned, std::size_t> h;
    for (auto c : p.counts)
        ++h[c];
    return h;
}

inline std::string histogram_string(const std::map<unsigned, std::size_t> & h)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [k, v] : h) {
        os << (first ? "" : ",") << k << ':' << v;
        first = false;
    }
    os << '}';
    return os.str();
}

// How the Walsh support sits on the coordinates: for each coordinate, the
// number of support sets containing it (sorted). Permutations only relabel
// coordinates and flips only change signs, so this is an invariant.
inline std::vector<std::size_t> coordinate_occupancy(const WalshSpectrum & s)
{
    std::vector<std::size_t> occ(s.n, 0);
    for (std::uint32_t S = 0; S < s.coeffs.size(); ++S)
        if (s[S] != 0)
            for (std::uint32_t m = S; m; m &= m - 1)
                ++occ[std::countr_zero(m)];
    std::sort(occ.begin(), occ.end());
    return occ;
}

inline constexpr std::size_t kIntersectionSupportLimit = 4096;

// Histogram of |S & T| over unordered pairs of support sets; empty when the
// support is too large for the quadratic scan.
inline std::map<unsigned, std::uint64_t> intersection_profile(const WalshSpectrum & s)
{
    std::vector<std::uint32_t> sets;
    for (std::uint32_t S = 0; S < s.coeffs.size(); ++S)
        if (s[S] != 0)
            sets.push_back(S);
    std::map<unsigned, std::uint64_t> h;
    if (sets.size() > kIntersectionSupportLimit)
        return h;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            ++h[static_cast<unsigned>(std::popcount(sets[i] & sets[j]))];
    return h;
}

// Returns the first differing invariant, or nullopt when all agree.
inline std::optional<std::string> invariant_mismatch(const CubeFunction & f, const CubeFunction & g,
                                                     const WalshSpectrum & sf, const WalshSpectrum & sg)
{
    if (auto a = support_size(f), b = support_size(g); a != b)
        return "support-size " + std::to_string(a) + " vs " + std::to_string(b);
    if (auto a = sf.support_size(), b = sg.support_size(); a != b)
        return "fourier-support-size " + std::to_string(a) + " vs " + std::to_string(b);
    const auto mf = degree_magnitudes(sf), mg = degree_magnitudes(sg);
    for (unsigned d = 0; d < mf.size(); ++d)
        if (mf[d] != mg[d])
            return "degree-" + std::to_string(d) + "-coefficient-magnitudes differ (" + std::to_string(mf[d].size())
                   + " vs " + std::to_string(mg[d].size()) + " nonzero)";
    if (auto a = coordinate_occupancy(sf), b = coordinate_occupancy(sg); a != b) {
        auto str = [](const std::vector<std::size_t> & v) {
            std::string out = "[";
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? "," : "") + std::to_string(v[i]);
            return out + "]";
        };
        return "fourier-coordinate-occupancy " + str(a) + " vs " + str(b);
    }
    if (intersection_profile(sf) != intersection_profile(sg))
        return std::string("fourier-intersection-profile differs");
    for (auto kind : {ProfileKind::bias, ProfileKind::stability}) {
        const auto hf = histogram(local_profile(f, kind)), hg = histogram(local_profile(g, kind));
        if (hf != hg)
            return std::string(kind == ProfileKind::bias ? "bias" : "stability") + "-profile-histogram "
                   + histogram_string(hf) + " vs " + histogram_string(hg);
    }
    return std::nullopt;
}

inline std::uint32_t map_subset(std::uint32_t s, const std::vector<std::uint8_t> & perm)
{
    std::uint32_t out = 0;
    for (; s; s &= s - 1)
        out |= std::uint32_t{1} << perm[std::countr_zero(s)];
    return out;
}

class PermutationSearch {
public:
    PermutationSearch(const CubeFunction & f, const CubeFunction & g, const WalshSpectrum & sf,
                      const WalshSpectrum & sg, std::uint64_t budget)
        : f_(f), g_(g), sf_(sf), sg_(sg), n_(f.dimension()), budget_(budget), perm_(n_), used_(n_, false)
    {
    }

    enum class Outcome { found, exhausted, budget };

    Outcome run()
    {
        auto r = extend(0);
        return r;
    }

    const CubeAutomorphism & witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static std::int64_t mag(std::int64_t x) { return x < 0 ? -x : x; }

    bool consistent(unsigned i) const
    {
        const std::uint32_t bit = std::uint32_t{1} << i;
        const std::uint32_t low = bit - 1;
        // every subset of {0..i} containing i
        for (std::uint32_t sub = low;; sub = (sub - 1) & low) {
            const std::uint32_t s = sub | bit;
            if (mag(sg_[s]) != mag(sf_[map_subset(s, perm_)]))
                return false;
            if (sub == 0)
                break;
        }
        return true;
    }

    // Solves parity(S & F) = [sign differs] for every nonzero coefficient.
    std::optional<std::uint32_t> solve_flips() const
    {
        std::vector<std::pair<std::uint32_t, unsigned>> basis; // (mask with leading bit, rhs)
        for (std::uint32_t s = 0; s < sg_.coeffs.size(); ++s) {
            const auto cg = sg_[s];
            if (cg == 0)
                continue;
            const auto cf = sf_[map_subset(s, perm_)];
            std::uint32_t mask = s;
            unsigned rhs = (cg < 0) != (cf < 0);
            for (auto [bm, br] : basis)
                if (mask & (std::uint32_t{1} << (31 - std::countl_zero(bm)))) {
                    mask ^= bm;
                    rhs ^= br;
                }
            if (mask == 0) {
                if (rhs)
                    return std::nullopt;
                continue;
            }
            // keep the basis fully reduced on its pivots
            const std::uint32_t pivot = std::uint32_t{1} << (31 - std::countl_zero(mask));
            for (auto & [bm, br] : basis)
                if (bm & pivot) {
                    bm ^= mask;
                    br ^= rhs;
                }
            basis.emplace_back(mask, rhs);
        }
        // reduced rows touch no other pivot, so with free variables at 0 each pivot equals its rhs
        std::uint32_t flips = 0;
        for (auto [bm, br] : basis)
            flips |= std::uint32_t{br} << (31 - std::countl_zero(bm));
        return flips;
    }

    Outcome extend(unsigned i)
    {
        if (++nodes_ > budget_)
            return Outcome::budget;
        if (i == n_) {
            auto flips = solve_flips();
            if (!flips)
                return Outcome::exhausted;
            CubeAutomorphism a{perm_, *flips};
            if (apply_automorphism(f_, a) == g_) {
                witness_ = a;
                return Outcome::found;
            }
            return Outcome::exhausted;
        }
        for (unsigned j = 0; j < n_; ++j) {
            if (used_[j])
                continue;
            perm_[i] = static_cast<std::uint8_t>(j);
            if (!consistent(i))
                continue;
            used_[j] = true;
            auto r = extend(i + 1);
            used_[j] = false;
            if (r != Outcome::exhausted)
                return r;
        }
        return Outcome::exhausted;
    }

    const CubeFunction & f_;
    const CubeFunction & g_;
    const WalshSpectrum & sf_;
    const WalshSpectrum & sg_;
    unsigned n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint8_t> perm_;
    std::vector<bool> used_;
    CubeAutomorphism witness_;
};

inline IsomorphismResult exhaustive_isomorphism(const CubeFunction & f, const CubeFunction & g)
{
    const unsigned n = f.dimension();
    IsomorphismResult res{Verdict::non_isomorphic, std::nullopt, "", 0};
    auto test = [&](const CubeAutomorphism & a) {
        ++res.nodes;
        for (Vertex v = 0; v < f.size(); ++v)
            if (f(a(v)) != g(v))
                return true;
        res.verdict = Verdict::isomorphic;
        res.witness = a;
        return false;
    };
    for_each_automorphism(n, test);
    if (res.verdict == Verdict::isomorphic)
        res.certificate = "witness found by exhaustive search";
    else
        res.certificate = "exhaustive search: no match among " + std::to_string(automorphism_count(n)) + " automorphisms";
    return res;
}

} // namespace detail

inline IsomorphismResult are_isomorphic(const CubeFunction & f, const CubeFunction & g,
                                        const IsomorphismOptions & opts = {})
{
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("isomorphism test between dimensions " + std::to_string(f.dimension()) + " and "
                                    + std::to_string(g.dimension()));
    const unsigned n = f.dimension();
    if (f == g)
        return {Verdict::isomorphic, CubeAutomorphism::identity(n), "identical tables", 0};
    if (n <= opts.exact_bound)
        return detail::exhaustive_isomorphism(f, g);

    const auto sf = walsh_transform(f), sg = walsh_transform(g);
    if (auto why = detail::invariant_mismatch(f, g, sf, sg))
        return {Verdict::non_isomorphic, std::nullopt, *why, 0};

    detail::PermutationSearch search(f, g, sf, sg, opts.node_budget);
    switch (search.run()) {
    case detail::PermutationSearch::Outcome::found:
        return {Verdict::isomorphic, search.witness(), "witness found by permutation search", search.nodes()};
    case detail::PermutationSearch::Outcome::exhausted:
        return {Verdict::non_isomorphic, std::nullopt,
                "permutation search exhausted without a matching spectrum", search.nodes()};
    case detail::PermutationSearch::Outcome::budget:
        break;
    }
    return {Verdict::unknown, std::nullopt,
            "node budget " + std::to_string(opts.node_budget) + " exhausted; all invariants agree", search.nodes()};
}

/// Lexicographically smallest table over the automorphism orbit of f.
inline CubeFunction canonical_form(const CubeFunction & f, unsigned exact_bound = 5)
{
    const unsigned n = f.dimension();
    if (n > exact_bound)
        throw std::out_of_range("canonical form requires n <= " + std::to_string(exact_bound));
    std::vector<Sign> best = f.table();
    std::vector<Sign> cur(f.size());
    auto consider = [&](auto && map_vertex) {
        // early-out lexicographic comparison while filling
        bool smaller = false;
        for (Vertex v = 0; v < f.size(); ++v) {
            cur[v] = static_cast<Sign>(f(map_vertex(v)));
            if (!smaller) {
                if (cur[v] > best[v])
                    return;
                if (cur[v] < best[v])
                    smaller = true;
            }
        }
        if (smaller)
            best = cur;
    };
    if (n <= kCachedGroupBound) {
        for (const auto & map : automorphism_vertex_maps(n))
            consider([&](Vertex v) { return map[v]; });
    } else {
        for_each_automorphism(n, [&](const CubeAutomorphism & a) {
            consider([&](Vertex v) { return a(v); });
            return true;
        });
    }
    return {n, std::move(best)};
}

} // namespace lbf
