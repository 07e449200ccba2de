#pragma once

// Deterministic seeded random streams. Samplers draw from counter-indexed
// substreams so parallel or reordered evaluation cannot change results.

#include <cmath>
#include <cstdint>

namespace jameslab {

class Rng {
  public:
    explicit Rng(std::uint64_t state) : s_(state ? state : 0x9e3779b97f4a7c15ULL) {}

    /// Independent stream for (seed, index); index 0, 1, 2, ... per sample.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng r(mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
        r.next_u64();
        return r;
    }

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform_int(long lo, long hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    double gaussian() {
        double u1 = 1.0 - uniform01(); // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
        z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
        return z ^ (z >> 33);
    }

    std::uint64_t s_;
};

} // namespace jameslab
