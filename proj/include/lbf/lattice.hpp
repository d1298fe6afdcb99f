#pragma once

// Periodic colorings of Z^n given by one period cell. The cell is stored
// row-major over the box [0,P_1) x ... x [0,P_n): coordinate 1 varies slowest.

#include "automorphism.hpp"
#include "cube_function.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

class PeriodicLatticeFunction {
public:
    PeriodicLatticeFunction(std::vector<unsigned> periods, std::vector<Sign> cell)
        : periods_(std::move(periods)), cell_(std::move(cell))
    {
        if (periods_.empty())
            throw std::invalid_argument("lattice dimension must be at least 1");
        std::uint64_t size = 1;
        for (auto p : periods_) {
            if (p < 1)
                throw std::invalid_argument("lattice periods must be positive");
            size *= p;
            if (size > (std::uint64_t{1} << kMaxDimension))
                throw std::out_of_range("lattice cell too large");
        }
        if (cell_.size() != size)
            throw std::invalid_argument("lattice cell has " + std::to_string(cell_.size()) + " entries, expected "
                                        + std::to_string(size));
        for (auto s : cell_)
            if (s != 1 && s != -1)
                throw std::invalid_argument("lattice cell entry is not +1 or -1");
    }

    unsigned dimension() const noexcept { return static_cast<unsigned>(periods_.size()); }
    const std::vector<unsigned> & periods() const noexcept { return periods_; }
    const std::vector<Sign> & cell() const noexcept { return cell_; }

    std::size_t index(const std::vector<std::int64_t> & point) const
    {
        std::size_t idx = 0;
        for (unsigned i = 0; i < periods_.size(); ++i) {
            const auto p = static_cast<std::int64_t>(periods_[i]);
            idx = idx * periods_[i] + static_cast<std::size_t>(((point[i] % p) + p) % p);
        }
        return idx;
    }

    std::vector<std::int64_t> residue(std::size_t idx) const
    {
        std::vector<std::int64_t> r(periods_.size());
        for (unsigned i = static_cast<unsigned>(periods_.size()); i-- > 0;) {
            r[i] = static_cast<std::int64_t>(idx % periods_[i]);
            idx /= periods_[i];
        }
        return r;
    }

    /// Value at an arbitrary lattice point.
    int operator()(const std::vector<std::int64_t> & point) const { return cell_[index(point)]; }

    friend bool operator==(const PeriodicLatticeFunction &, const PeriodicLatticeFunction &) = default;

private:
    std::vector<unsigned> periods_;
    std::vector<Sign> cell_;
};

/// f~(x) = f(x mod 2), reading residue 0 as cube value +1 and 1 as -1.
inline PeriodicLatticeFunction extend_to_lattice(const CubeFunction & f)
{
    const unsigned n = f.dimension();
    std::vector<Sign> cell(f.size());
    for (Vertex v = 0; v < f.size(); ++v) {
        std::size_t idx = 0;
        for (unsigned i = 0; i < n; ++i)
            idx = idx * 2 + ((v >> i) & 1u);
        cell[idx] = static_cast<Sign>(f(v));
    }
    return {std::vector<unsigned>(n, 2), std::move(cell)};
}

/// Fraction of +1 among the 2n neighbors x +- e_i, when it is the same for every x.
inline std::optional<Rational> verify_lattice_bias(const PeriodicLatticeFunction & g)
{
    const unsigned n = g.dimension();
    std::optional<unsigned> common;
    for (std::size_t idx = 0; idx < g.cell().size(); ++idx) {
        auto r = g.residue(idx);
        unsigned plus = 0;
        for (unsigned i = 0; i < n; ++i)
            for (int delta : {1, -1}) {
                r[i] += delta;
                plus += g(r) == 1;
                r[i] -= delta;
            }
        if (common && *common != plus)
            return std::nullopt;
        common = plus;
    }
    return make_rational(*common, 2 * n);
}

/// Searches the finite symmetry group of a cell whose periods are all equal:
/// coordinate permutations, reflections x_i -> -x_i and translations by a
/// residue vector. Returns true when some symmetry maps a onto b.
inline bool are_lattice_isomorphic(const PeriodicLatticeFunction & a, const PeriodicLatticeFunction & b)
{
    if (a.periods() != b.periods())
        throw std::invalid_argument("lattice isomorphism needs identical period boxes");
    const unsigned n = a.dimension();
    const unsigned period = a.periods().front();
    if (std::any_of(a.periods().begin(), a.periods().end(), [&](unsigned p) { return p != period; }))
        throw std::invalid_argument("lattice isomorphism implemented for equal periods only");
    if (n > 6)
        throw std::out_of_range("lattice isomorphism search limited to n <= 6");
    const std::size_t cells = a.cell().size();
    std::vector<std::vector<std::int64_t>> residues(cells);
    for (std::size_t idx = 0; idx < cells; ++idx)
        residues[idx] = b.residue(idx);

    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::int64_t> image(n);
    do {
        for (std::uint32_t reflect = 0; reflect < (std::uint32_t{1} << n); ++reflect)
            for (std::size_t t = 0; t < cells; ++t) {
                const auto shift = b.residue(t);
                bool match = true;
                for (std::size_t idx = 0; idx < cells && match; ++idx) {
                    const auto & r = residues[idx];
                    for (unsigned i = 0; i < n; ++i)
                        image[perm[i]] = (((reflect >> i) & 1u) ? -r[i] : r[i]) + shift[perm[i]];
                    match = a(image) == b.cell()[idx];
                }
                if (match)
                    return true;
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace lbf
