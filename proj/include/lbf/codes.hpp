#pragma once

// Binary codes as sets of n-bit masks (coordinate i <-> bit i-1, as for cube
// vertices), with the Hamming code and the parity-right rearrangement used to
// produce disjoint translates.

#include "cube_function.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbf {

class BinaryCode {
public:
    BinaryCode(unsigned n, std::vector<std::uint32_t> words) : n_(n), words_(std::move(words))
    {
        if (n > kMaxDimension)
            throw std::out_of_range("code length " + std::to_string(n) + " exceeds " + std::to_string(kMaxDimension));
        std::sort(words_.begin(), words_.end());
        if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
            throw std::invalid_argument("duplicate codeword");
        if (!words_.empty() && words_.back() >= (std::uint64_t{1} << n))
            throw std::invalid_argument("codeword does not fit in " + std::to_string(n) + " bits");
    }

    unsigned length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    /// Sorted ascending.
    const std::vector<std::uint32_t> & words() const noexcept { return words_; }
    bool contains(std::uint32_t w) const { return std::binary_search(words_.begin(), words_.end(), w); }

    friend bool operator==(const BinaryCode &, const BinaryCode &) = default;

private:
    unsigned n_;
    std::vector<std::uint32_t> words_;
};

inline unsigned hamming_distance(std::uint32_t a, std::uint32_t b) { return std::popcount(a ^ b); }

/// Hamming code H_k on 2^k - 1 bits. Positions 2^l are parity bits equal to the
/// xor of the data positions j with (i & j) != 0.
inline BinaryCode hamming_code(unsigned k)
{
    if (k < 2)
        throw std::invalid_argument("hamming_code requires k >= 2");
    const unsigned n = (1u << k) - 1;
    if (n > kMaxDimension)
        throw std::out_of_range("hamming_code(" + std::to_string(k) + ") exceeds maximum length");
    std::vector<unsigned> data_positions;
    for (unsigned pos = 1; pos <= n; ++pos)
        if (!std::has_single_bit(pos))
            data_positions.push_back(pos);
    std::vector<std::uint32_t> words;
    words.reserve(std::size_t{1} << data_positions.size());
    for (std::uint32_t data = 0; data < (std::uint32_t{1} << data_positions.size()); ++data) {
        std::uint32_t w = 0;
        unsigned syndrome = 0; // xor of the positions of set data bits
        for (unsigned t = 0; t < data_positions.size(); ++t)
            if ((data >> t) & 1u) {
                w |= std::uint32_t{1} << (data_positions[t] - 1);
                syndrome ^= data_positions[t];
            }
        // parity position 2^l collects data bits j with bit l of j set
        for (unsigned l = 0; l < k; ++l)
            if ((syndrome >> l) & 1u)
                w |= std::uint32_t{1} << ((1u << l) - 1);
        words.push_back(w);
    }
    return {n, std::move(words)};
}

inline unsigned min_distance(const BinaryCode & c)
{
    if (c.size() < 2)
        throw std::invalid_argument("minimum distance needs at least two codewords");
    unsigned best = std::numeric_limits<unsigned>::max();
    const auto & w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            best = std::min(best, hamming_distance(w[i], w[j]));
    return best;
}

/// Radius-1 balls around the codewords partition {0,1}^n.
inline bool is_perfect_radius1(const BinaryCode & c)
{
    const unsigned n = c.length();
    if (static_cast<std::uint64_t>(c.size()) * (n + 1) != (std::uint64_t{1} << n))
        return false;
    std::vector<bool> covered(std::size_t{1} << n, false);
    for (auto w : c.words()) {
        if (covered[w])
            return false;
        covered[w] = true;
        for (unsigned i = 0; i < n; ++i) {
            const auto y = w ^ (std::uint32_t{1} << i);
            if (covered[y])
                return false;
            covered[y] = true;
        }
    }
    return true;
}

inline BinaryCode xor_translate(const BinaryCode & c, std::uint32_t t)
{
    if (t >= (std::uint64_t{1} << c.length()))
        throw std::out_of_range("translate mask " + std::to_string(t) + " does not fit in "
                                + std::to_string(c.length()) + " bits");
    std::vector<std::uint32_t> words;
    words.reserve(c.size());
    for (auto w : c.words())
        words.push_back(w ^ t);
    return {c.length(), std::move(words)};
}

/// New coordinate order for the parity-right layout: result[j] is the old
/// 1-based position placed at new coordinate j+1. Data positions come first in
/// increasing order, then parity positions 1, 2, 4, ... in increasing order.
inline std::vector<unsigned> parity_right_order(unsigned k)
{
    const unsigned n = (1u << k) - 1;
    std::vector<unsigned> order;
    for (unsigned pos = 1; pos <= n; ++pos)
        if (!std::has_single_bit(pos))
            order.push_back(pos);
    for (unsigned l = 0; l < k; ++l)
        order.push_back(1u << l);
    return order;
}

inline BinaryCode rearrange_parity_right(const BinaryCode & c, unsigned k)
{
    if (k < 2 || k > 5 || c.length() != (1u << k) - 1)
        throw std::invalid_argument("rearrange_parity_right expects a Hamming code of length 2^k - 1");
    const auto order = parity_right_order(k);
    std::vector<std::uint32_t> words;
    words.reserve(c.size());
    for (auto w : c.words()) {
        std::uint32_t out = 0;
        for (unsigned j = 0; j < order.size(); ++j)
            out |= ((w >> (order[j] - 1)) & 1u) << j;
        words.push_back(out);
    }
    return {c.length(), std::move(words)};
}

/// Mask placing t in the k parity coordinates of a parity-right code.
inline std::uint32_t parity_translate_mask(unsigned k, std::uint32_t t)
{
    if (t >= (1u << k))
        throw std::out_of_range("translate index " + std::to_string(t) + " needs more than " + std::to_string(k)
                                + " bits");
    const unsigned n = (1u << k) - 1;
    return t << (n - k);
}

} // namespace lbf
