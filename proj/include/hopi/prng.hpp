#pragma once

// Pinned pseudo-random generator. Instance files and solver runs must be
// reproducible across platforms and standard libraries, so nothing here
// defers to <random> distributions.
//
//   seeding:  splitmix64 expands one 64-bit seed into four state words
//   stream:   xoshiro256** (Blackman & Vigna)
//   integers: rejection sampling on the low end (unbiased modulo)
//   reals:    top 53 bits scaled by 2^-53, range [0, 1)

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace hopi {

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of the index-th independent stream under a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    std::uint64_t t = index ^ a;
    return splitmix64(t);
}

class Rng {
public:
    using result_type = std::uint64_t;

    explicit constexpr Rng(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    constexpr result_type operator()() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). bound must be positive.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = (*this)();
            if (x >= threshold) return x % bound;
        }
    }

    constexpr double uniform01() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

/// First `count` entries of `pool` after a partial Fisher-Yates shuffle.
/// The selection is returned in shuffle order; callers sort if needed.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t count, Rng& rng) {
    for (std::size_t j = 0; j < count; ++j) {
        const auto pick = j + static_cast<std::size_t>(rng.below(pool.size() - j));
        std::swap(pool[j], pool[pick]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace hopi
