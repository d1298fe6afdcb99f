#pragma once

// Boolean functions on the hypercube {-1,1}^n stored as full truth tables.
//
// Vertex encoding: vertex id v in [0, 2^n); coordinate x_i (1-based) is +1
// when bit (i-1) of v is 0 and -1 when that bit is 1. Every module and file
// format uses this convention.

#include "rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

using Vertex = std::uint32_t;
using Sign = std::int8_t;

/// Truth tables larger than 2^kMaxDimension entries are refused.
inline constexpr unsigned kMaxDimension = 24;

inline void check_dimension(unsigned n, unsigned max_dimension = kMaxDimension)
{
    if (n < 1 || n > max_dimension)
        throw std::out_of_range("dimension " + std::to_string(n) + " outside [1, "
                                + std::to_string(max_dimension) + "]");
}

/// Value of coordinate `i` (0-based) at vertex v.
constexpr int coordinate(Vertex v, unsigned i) { return ((v >> i) & 1u) ? -1 : 1; }

/// Product of the coordinates in `mask` at vertex v, i.e. the character chi_S(v).
constexpr int character(std::uint32_t mask, Vertex v) { return (std::popcount(mask & v) & 1) ? -1 : 1; }

class CubeFunction {
public:
    CubeFunction(unsigned n, std::vector<Sign> table) : n_(n), table_(std::move(table))
    {
        check_dimension(n);
        if (table_.size() != (std::size_t{1} << n))
            throw std::invalid_argument("truth table has " + std::to_string(table_.size())
                                        + " entries, expected 2^" + std::to_string(n));
        for (Sign s : table_)
            if (s != 1 && s != -1)
                throw std::invalid_argument("truth table entry is not +1 or -1");
    }

    static CubeFunction constant(unsigned n, int value)
    {
        check_dimension(n);
        return {n, std::vector<Sign>(std::size_t{1} << n, static_cast<Sign>(value >= 0 ? 1 : -1))};
    }

    /// Builds the table by evaluating `fn` at every vertex; `fn` must return +1 or -1.
    static CubeFunction from(unsigned n, const std::function<int(Vertex)> & fn)
    {
        check_dimension(n);
        std::vector<Sign> table(std::size_t{1} << n);
        for (Vertex v = 0; v < table.size(); ++v)
            table[v] = static_cast<Sign>(fn(v));
        return {n, std::move(table)};
    }

    unsigned dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return table_.size(); }
    const std::vector<Sign> & table() const noexcept { return table_; }

    int operator()(Vertex v) const { return table_[v]; }
    int at(Vertex v) const
    {
        if (v >= table_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        return table_[v];
    }

    CubeFunction operator-() const
    {
        auto t = table_;
        for (auto & s : t)
            s = static_cast<Sign>(-s);
        return {n_, std::move(t)};
    }

    friend bool operator==(const CubeFunction &, const CubeFunction &) = default;
    /// Lexicographic on (dimension, table) with -1 < +1.
    friend std::strong_ordering operator<=>(const CubeFunction & a, const CubeFunction & b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        return a.table_ <=> b.table_;
    }

private:
    unsigned n_;
    std::vector<Sign> table_;
};

/// Number of vertices where f = +1.
inline std::size_t support_size(const CubeFunction & f)
{
    std::size_t l = 0;
    for (Sign s : f.table())
        l += (s == 1);
    return l;
}

/// Single-bit flips of v in ascending coordinate order.
inline std::vector<Vertex> neighbors(Vertex v, unsigned n)
{
    check_dimension(n, 31);
    if (v >= (Vertex{1} << n))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
    std::vector<Vertex> out(n);
    for (unsigned i = 0; i < n; ++i)
        out[i] = v ^ (Vertex{1} << i);
    return out;
}

enum class ProfileKind { bias, stability };

struct LocalProfile {
    ProfileKind kind;
    /// counts[v]: neighbors y of v with f(y) = +1 (bias) or f(y) = f(v) (stability).
    std::vector<std::uint8_t> counts;
};

inline LocalProfile local_profile(const CubeFunction & f, ProfileKind kind)
{
    const unsigned n = f.dimension();
    LocalProfile p{kind, std::vector<std::uint8_t>(f.size())};
    for (Vertex v = 0; v < f.size(); ++v) {
        const int target = kind == ProfileKind::bias ? 1 : f(v);
        unsigned c = 0;
        for (unsigned i = 0; i < n; ++i)
            c += f(v ^ (Vertex{1} << i)) == target;
        p.counts[v] = static_cast<std::uint8_t>(c);
    }
    return p;
}

/// count/n when every entry of the profile equals count.
inline std::optional<Rational> constant_fraction(const LocalProfile & p, unsigned n)
{
    if (p.counts.empty())
        return std::nullopt;
    const auto first = p.counts.front();
    for (auto c : p.counts)
        if (c != first)
            return std::nullopt;
    return make_rational(first, n);
}

inline std::optional<Rational> is_locally_biased(const CubeFunction & f)
{
    return constant_fraction(local_profile(f, ProfileKind::bias), f.dimension());
}

inline std::optional<Rational> is_locally_stable(const CubeFunction & f)
{
    return constant_fraction(local_profile(f, ProfileKind::stability), f.dimension());
}

/// Text form of a truth table: character v is '+' or '-' for f(v).
inline std::string table_string(const CubeFunction & f)
{
    std::string s(f.size(), '+');
    for (Vertex v = 0; v < f.size(); ++v)
        if (f(v) < 0)
            s[v] = '-';
    return s;
}

} // namespace lbf
