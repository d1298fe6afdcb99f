#pragma once

// Greedy locally (b/n)-biased labelings of the n-regular tree, truncated at a
// fixed depth. The root has n children and every other internal vertex has
// n - 1 children, so every vertex above the last level has degree n.

#include "random.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

struct TreeLabeling {
    unsigned degree;
    unsigned depth;
    /// Breadth-first order; vertex 0 is the root.
    std::vector<std::int8_t> signs;
    std::vector<std::int64_t> parent; ///< -1 for the root
    std::vector<unsigned> level;

    std::size_t size() const { return signs.size(); }
};

inline std::uint64_t tree_size(unsigned degree, unsigned depth)
{
    std::uint64_t total = 1, layer = 1;
    for (unsigned d = 1; d <= depth; ++d) {
        layer *= d == 1 ? degree : degree - 1;
        total += layer;
        if (total > 50'000'000)
            throw std::out_of_range("truncated tree too large");
    }
    return total;
}

/// Deterministic mode (no seed): root is +1 unless b = 0, which forces -1;
/// each vertex gives +1 to its first children until its quota of b is met.
/// With a seed the root is +1 with probability b/n and the +1 children are a
/// uniformly random subset of the required size.
inline TreeLabeling tree_greedy(unsigned degree, unsigned depth, unsigned b,
                                std::optional<std::uint64_t> seed = std::nullopt)
{
    if (degree < 3)
        throw std::invalid_argument("tree_greedy: degree must be at least 3");
    if (depth < 2)
        throw std::invalid_argument("tree_greedy: depth must be at least 2");
    if (b > degree)
        throw std::invalid_argument("tree_greedy: b exceeds degree");
    const auto total = tree_size(degree, depth);
    std::optional<CounterRng> rng;
    if (seed)
        rng.emplace(*seed);

    TreeLabeling t{degree, depth, {}, {}, {}};
    t.signs.reserve(total);
    t.parent.reserve(total);
    t.level.reserve(total);
    const bool root_plus = rng ? rng->bernoulli(b, degree) : b > 0;
    t.signs.push_back(root_plus ? 1 : -1);
    t.parent.push_back(-1);
    t.level.push_back(0);

    std::vector<std::int8_t> kids;
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (t.level[v] == depth)
            continue;
        const unsigned children = v == 0 ? degree : degree - 1;
        const unsigned from_parent = (v != 0 && t.signs[t.parent[v]] == 1) ? 1 : 0;
        if (b < from_parent || b - from_parent > children)
            throw std::logic_error("tree_greedy: quota infeasible at vertex " + std::to_string(v));
        const unsigned quota = b - from_parent;
        kids.assign(children, -1);
        std::fill(kids.begin(), kids.begin() + quota, std::int8_t{1});
        if (rng)
            for (unsigned i = children; i > 1; --i)
                std::swap(kids[i - 1], kids[rng->below(i)]);
        for (auto s : kids) {
            t.signs.push_back(s);
            t.parent.push_back(static_cast<std::int64_t>(v));
            t.level.push_back(t.level[v] + 1);
        }
    }
    return t;
}

/// Checks every vertex above the last level has exactly b neighbors labeled +1.
inline bool verify_tree(const TreeLabeling & t, unsigned b)
{
    std::vector<unsigned> plus(t.size(), 0);
    for (std::size_t v = 1; v < t.size(); ++v) {
        const auto p = static_cast<std::size_t>(t.parent[v]);
        plus[p] += t.signs[v] == 1;
        plus[v] += t.signs[p] == 1;
    }
    for (std::size_t v = 0; v < t.size(); ++v)
        if (t.level[v] < t.depth && plus[v] != b)
            return false;
    return true;
}

} // namespace lbf
