#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace invstat {

// Stream purposes keep unrelated consumers of the same master seed on
// disjoint streams.
enum class StreamPurpose : std::uint64_t {
    gaussian = 1,
    student_t = 2,
    drop_rebound = 3,
    sweep = 4,
};

// Counter-style deterministic RNG: splitmix64 over a state derived from
// (master_seed, stream_key). Identical (seed, key) gives an identical
// sequence regardless of thread scheduling, which is what makes the
// permutation sweeps reproducible under any worker count. The algorithm
// id is recorded in run manifests.
class RngStream {
public:
    static constexpr const char* kAlgorithm = "splitmix64";

    RngStream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> key)
        : state_(master_seed) {
        state_ = mix(state_);
        for (std::uint64_t k : key) {
            state_ ^= mix(k + 0x9E3779B97F4A7C15ULL);
            state_ = mix(state_);
        }
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on [0, bound), unbiased (rejection below 2^64 mod bound).
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via the Marsaglia polar method; the second variate of
    // each accepted pair is cached.
    double next_normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_unit() - 1.0;
            v = 2.0 * next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * f;
        has_cached_ = true;
        return u * f;
    }

    // Gamma(alpha, 1) via Marsaglia-Tsang; caller guarantees alpha >= 1.
    double next_gamma(double alpha) {
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, t;
            do {
                x = next_normal();
                t = 1.0 + c * x;
            } while (t <= 0.0);
            const double v = t * t * t;
            const double u = next_unit();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace invstat
