#pragma once

#include <cmath>
#include <cstdint>

namespace nomafair {

/// xoshiro256++ seeded through splitmix64, with cheap derivation of
/// independent streams: stream i of a run is Rng(seed, i). Every random
/// draw in the simulator goes through this class so that results are
/// reproducible bit-for-bit across platforms and thread counts.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t st = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
        for (auto& w : s_) w = splitmix64(st);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe to pass to log().
    double next_open_double() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Unit-mean exponential draw: the squared magnitude of a circularly
    /// symmetric complex Gaussian with unit power, by inversion.
    double next_exponential() { return -std::log(next_open_double()); }

    /// Uniform integer on [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& state) {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
};

}  // namespace nomafair
