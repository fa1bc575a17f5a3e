#pragma once

#include <cstdint>

#include "relbell/vec.hpp"

namespace relbell {

// splitmix64: tiny, fast, and identical on every platform, which keeps seeded
// runs reproducible byte for byte.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform direction on the sphere.
    Vec3 unit_vector() {
        const double z = 2.0 * uniform() - 1.0;
        const double phi = 2.0 * 3.14159265358979323846 * uniform();
        const double r = std::sqrt((1.0 - z) * (1.0 + z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

private:
    std::uint64_t state_;
};

}  // namespace relbell
