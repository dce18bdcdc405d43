#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "tspga/error.hpp"

namespace tspga {

/// SplitMix64 finalizer applied to a counter value.
constexpr std::uint64_t splitmix64(std::uint64_t seed) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Reseed-per-call random source. Every draw first increments the seed
/// counter by one and then returns a pure function of the new counter, so
/// the whole stream is determined by the initial seed and the number of
/// draws. Single owner; not for concurrent use.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t initial_seed = 0) noexcept
        : initial_(initial_seed), seed_(initial_seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_float() {
        return static_cast<double>(splitmix64(advance()) >> 11) * 0x1.0p-53;
    }

    /// Uniform-ish in [0, max) by modulo reduction. `max` must be >= 2.
    std::uint64_t next_int(std::uint64_t max) {
        if (max < 2) throw ContractError("next_int: max must be >= 2");
        return splitmix64(advance()) % max;
    }

    /// Current counter value (the "last seed" once a run ends).
    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t initial_seed() const noexcept { return initial_; }
    std::uint64_t calls() const noexcept { return seed_ - initial_; }

private:
    std::uint64_t advance() {
        if (seed_ == UINT64_MAX) throw ContractError("seed counter overflow");
        return ++seed_;
    }

    std::uint64_t initial_;
    std::uint64_t seed_;
};

/// Fisher-Yates from the back: for i = len-1 .. 1 swap i with next_int(i+1).
/// Consumes len-1 draws (none for len <= 1).
template <typename T>
void shuffle(std::span<T> seq, CounterRng& rng) {
    for (std::size_t i = seq.size(); i-- > 1;) {
        const auto j = static_cast<std::size_t>(rng.next_int(i + 1));
        std::swap(seq[i], seq[j]);
    }
}

}  // namespace tspga
