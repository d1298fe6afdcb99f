#pragma once

// Exhaustive enumeration of locally biased / locally stable functions on small
// cubes, grouped into isomorphism classes by canonical form.
//
// Two independent search routes:
//   oracle    - scans all 2^(2^n) truth tables (n <= 4);
//   backtrack - assigns vertices in breadth-first order from vertex 0 and
//               prunes a branch as soon as some vertex can no longer reach its
//               target count (n <= 5).

#include "isomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lbf {

enum class EnumerationMode { oracle, backtrack };

inline constexpr unsigned kOracleBound = 4;
inline constexpr unsigned kBacktrackBound = 5;

struct EnumerationConstraint {
    ProfileKind kind = ProfileKind::bias;
    /// Unset: any constant profile.
    std::optional<Rational> p;
};

struct EnumerationReport {
    unsigned n = 0;
    EnumerationConstraint constraint;
    /// Every satisfying function, sorted.
    std::vector<CubeFunction> functions;
    /// One canonical form per isomorphism class, sorted.
    std::vector<CubeFunction> class_representatives;
    std::uint64_t nodes = 0;

    std::size_t total_functions() const { return functions.size(); }
    /// Distinct p values realised by the enumerated functions.
    std::set<Rational> realised_p() const
    {
        std::set<Rational> out;
        for (const auto & f : functions) {
            auto p = constraint.kind == ProfileKind::bias ? is_locally_biased(f) : is_locally_stable(f);
            out.insert(*p);
        }
        return out;
    }
};

/// { b/2^k : 2^k divides n, 0 <= b <= 2^k }.
inline std::set<Rational> permissible_p(unsigned n)
{
    if (n < 1)
        throw std::invalid_argument("permissible_p: n must be >= 1");
    std::set<Rational> out;
    for (unsigned d = 1; d <= n && n % d == 0; d <<= 1)
        for (unsigned b = 0; b <= d; ++b)
            out.insert(make_rational(b, d));
    return out;
}

namespace detail {

// Target neighbor counts allowed by the constraint.
inline std::vector<unsigned> target_counts(unsigned n, const EnumerationConstraint & c)
{
    std::vector<unsigned> out;
    for (unsigned m = 0; m <= n; ++m)
        if (!c.p || make_rational(m, n) == *c.p)
            out.push_back(m);
    return out;
}

inline bool satisfies(const CubeFunction & f, const EnumerationConstraint & c)
{
    auto p = c.kind == ProfileKind::bias ? is_locally_biased(f) : is_locally_stable(f);
    return p && (!c.p || *p == *c.p);
}

inline std::vector<Vertex> bfs_order(unsigned n)
{
    std::vector<Vertex> order;
    std::vector<bool> seen(std::size_t{1} << n, false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (unsigned i = 0; i < n; ++i) {
            const Vertex y = order[head] ^ (Vertex{1} << i);
            if (!seen[y]) {
                seen[y] = true;
                order.push_back(y);
            }
        }
    return order;
}

class Backtracker {
public:
    Backtracker(unsigned n, ProfileKind kind, unsigned target)
        : n_(n), kind_(kind), target_(target), order_(bfs_order(n)), value_(std::size_t{1} << n, 0)
    {
    }

    // Explores the subtree below `prefix` (values for the first prefix.size() vertices in BFS order).
    // Calls on_leaf(table) at full depth, or on_prefix(values) once `stop_depth` vertices are set.
    template <typename Leaf, typename Prefix>
    void run(const std::vector<Sign> & prefix, std::size_t stop_depth, Leaf && on_leaf, Prefix && on_prefix)
    {
        std::fill(value_.begin(), value_.end(), Sign{0});
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            value_[order_[d]] = prefix[d];
            if (!feasible_around(order_[d]))
                return;
        }
        descend(prefix.size(), stop_depth, on_leaf, on_prefix);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool feasible_at(Vertex w) const
    {
        int reference;
        if (kind_ == ProfileKind::bias)
            reference = 1;
        else if (value_[w] == 0)
            return true;
        else
            reference = value_[w];
        unsigned hits = 0, open = 0;
        for (unsigned i = 0; i < n_; ++i) {
            const Sign y = value_[w ^ (Vertex{1} << i)];
            if (y == 0)
                ++open;
            else if (y == reference)
                ++hits;
        }
        return hits <= target_ && target_ <= hits + open;
    }

    bool feasible_around(Vertex u) const
    {
        if (!feasible_at(u))
            return false;
        for (unsigned i = 0; i < n_; ++i)
            if (!feasible_at(u ^ (Vertex{1} << i)))
                return false;
        return true;
    }

    template <typename Leaf, typename Prefix>
    void descend(std::size_t depth, std::size_t stop_depth, Leaf & on_leaf, Prefix & on_prefix)
    {
        ++nodes_;
        if (depth == order_.size()) {
            on_leaf(value_);
            return;
        }
        if (depth == stop_depth) {
            std::vector<Sign> values(depth);
            for (std::size_t d = 0; d < depth; ++d)
                values[d] = value_[order_[d]];
            on_prefix(values);
            return;
        }
        const Vertex u = order_[depth];
        for (Sign s : {Sign{1}, Sign{-1}}) {
            value_[u] = s;
            if (feasible_around(u))
                descend(depth + 1, stop_depth, on_leaf, on_prefix);
        }
        value_[u] = 0;
    }

    unsigned n_;
    ProfileKind kind_;
    unsigned target_;
    std::vector<Vertex> order_;
    std::vector<Sign> value_;
    std::uint64_t nodes_ = 0;
};

inline std::vector<CubeFunction> oracle_scan(unsigned n, const EnumerationConstraint & c, std::uint64_t & nodes)
{
    std::vector<CubeFunction> out;
    const std::size_t size = std::size_t{1} << n;
    const std::uint64_t total = std::uint64_t{1} << size;
    std::vector<Sign> table(size);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        ++nodes;
        for (std::size_t v = 0; v < size; ++v)
            table[v] = ((bits >> v) & 1u) ? -1 : 1;
        CubeFunction f(n, table);
        if (satisfies(f, c))
            out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<CubeFunction> backtrack_search(unsigned n, const EnumerationConstraint & c, unsigned threads,
                                                  std::uint64_t & nodes)
{
    std::vector<CubeFunction> out;
    auto collect_into = [n](std::vector<CubeFunction> & sink) {
        return [n, &sink](const std::vector<Sign> & table) { sink.emplace_back(n, table); };
    };
    for (unsigned target : target_counts(n, c)) {
        if (threads <= 1) {
            Backtracker bt(n, c.kind, target);
            bt.run({}, std::size_t(-1), collect_into(out), [](const std::vector<Sign> &) {});
            nodes += bt.nodes();
            continue;
        }
        // split the tree at a fixed depth; workers pull prefixes in order
        const std::size_t split = std::min<std::size_t>(std::size_t{1} << n, 6);
        std::vector<std::vector<Sign>> prefixes;
        Backtracker root(n, c.kind, target);
        root.run({}, split, collect_into(out), [&](const std::vector<Sign> & p) { prefixes.push_back(p); });
        nodes += root.nodes();
        std::vector<std::vector<CubeFunction>> found(prefixes.size());
        std::vector<std::uint64_t> counted(prefixes.size(), 0);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
                Backtracker bt(n, c.kind, target);
                bt.run(prefixes[i], std::size_t(-1), collect_into(found[i]), [](const std::vector<Sign> &) {});
                // the prefix node itself was already counted by the root pass
                counted[i] = bt.nodes() - 1;
            }
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(worker);
        }
        for (std::size_t i = 0; i < prefixes.size(); ++i) {
            nodes += counted[i];
            for (auto & f : found[i])
                out.push_back(std::move(f));
        }
    }
    return out;
}

} // namespace detail

inline EnumerationReport enumerate_functions(unsigned n, const EnumerationConstraint & constraint,
                                             EnumerationMode mode = EnumerationMode::backtrack, unsigned threads = 1)
{
    check_dimension(n);
    if (mode == EnumerationMode::oracle && n > kOracleBound)
        throw std::out_of_range("oracle enumeration supports n <= " + std::to_string(kOracleBound));
    if (mode == EnumerationMode::backtrack && n > kBacktrackBound)
        throw std::out_of_range("backtracking enumeration supports n <= " + std::to_string(kBacktrackBound));
    EnumerationReport report;
    report.n = n;
    report.constraint = constraint;
    report.functions = mode == EnumerationMode::oracle ? detail::oracle_scan(n, constraint, report.nodes)
                                                        : detail::backtrack_search(n, constraint, threads, report.nodes);
    std::sort(report.functions.begin(), report.functions.end());
    std::set<CubeFunction> classes;
    for (const auto & f : report.functions)
        classes.insert(canonical_form(f));
    report.class_representatives.assign(classes.begin(), classes.end());
    return report;
}

inline EnumerationReport enumerate_locally_biased(unsigned n, std::optional<Rational> p = std::nullopt,
                                                  EnumerationMode mode = EnumerationMode::backtrack,
                                                  unsigned threads = 1)
{
    return enumerate_functions(n, {ProfileKind::bias, std::move(p)}, mode, threads);
}

inline EnumerationReport enumerate_locally_stable(unsigned n, std::optional<Rational> p = std::nullopt,
                                                  EnumerationMode mode = EnumerationMode::backtrack,
                                                  unsigned threads = 1)
{
    return enumerate_functions(n, {ProfileKind::stability, std::move(p)}, mode, threads);
}

} // namespace lbf
