#pragma once

#include <cstdint>
#include <vector>

namespace ncb {

// Deterministic, implementation-independent RNG. std::mt19937 +
// std::shuffle would tie partitions to a particular standard library;
// this generator produces identical streams everywhere.
class fast_rng {
public:
    explicit fast_rng(std::uint64_t seed) : state_(splitmix64(seed + 0x9e3779b97f4a7c15ULL)) {
        if (state_ == 0) state_ = 0x2545f4914f6cdd1dULL;
    }

    std::uint64_t next() {
        // xorshift64*: full 64-bit period minus the zero state.
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    // Uniform value in [0, bound); bound > 0. Rejection keeps it unbiased.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

// Fisher–Yates shuffle driven by fast_rng.
template <typename T>
void shuffle(std::vector<T>& items, fast_rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace ncb
