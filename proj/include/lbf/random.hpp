#pragma once

// Counter-based random numbers. Output k of stream (seed, stream) is
//   splitmix64_mix(key + k * 0x9E3779B97F4A7C15),
//   key = splitmix64_mix(seed + stream * 0xD1B54A32D192ED03),
// which is reproducible across platforms and splits into independent streams
// without shared state. Bounded integers use Lemire's multiply-shift with
// rejection, so results do not depend on the standard library's distributions.

#include <cstdint>

namespace lbf {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED'0000'0000'0001ull;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(splitmix64_mix(seed + stream * 0xD1B54A32D192ED03ull))
    {
    }

    std::uint64_t next() { return splitmix64_mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// True with probability num/den.
    bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace lbf
