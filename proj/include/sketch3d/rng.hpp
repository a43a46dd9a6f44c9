#pragma once

#include <cmath>
#include <cstdint>

namespace sketch3d {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic stream id from a seed plus arbitrary tags. Every random
// consumer in the library derives its own stream this way so results are
// independent of thread scheduling.
inline std::uint64_t stream_seed(std::uint64_t seed) { return splitmix64(seed); }

template <typename... Rest>
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag, Rest... rest) {
    return stream_seed(splitmix64(seed ^ (tag + 0x9e3779b97f4a7c15ull)), rest...);
}

// PCG32 (O'Neill). Small state, cheap construction; one instance per pixel /
// per boundary stream keeps rendering bitwise reproducible.
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed = 0x853c49e6748fea9bull, std::uint64_t stream = 1) {
        state_ = 0;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ull + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u32()) * (1.0 / 4294967296.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    std::uint32_t next_below(std::uint32_t bound) {
        // Debiased modulo; bound is tiny compared to 2^32 everywhere we use it.
        std::uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            std::uint32_t r = next_u32();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via Box-Muller (no cached spare: draw order stays
    // position-independent).
    double gaussian() {
        double u1 = 0.0;
        do { u1 = next_double(); } while (u1 <= 0.0);
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace sketch3d
