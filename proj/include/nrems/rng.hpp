#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "nrems/geometry.hpp"

namespace nrems {

/// SplitMix64 finalizer; used as a stateless bit mixer.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: every draw is a pure function of (seed, counter),
/// so results are independent of evaluation order and thread scheduling.
struct CounterRng {
    uint64_t seed = 0;

    /// Uniform double in (0, 1].
    double uniform_open(uint64_t counter) const {
        const uint64_t h = mix64(counter ^ mix64(seed));
        return (static_cast<double>(h >> 11) + 1.0) * 0x1p-53;
    }

    /// Uniform double in [0, 1).
    double uniform(uint64_t counter) const {
        const uint64_t h = mix64(mix64(counter ^ mix64(seed)) ^ 0x5851f42d4c957f2dULL);
        return static_cast<double>(h >> 11) * 0x1p-53;
    }

    /// Circularly symmetric complex Gaussian with E|z|^2 = variance,
    /// via Box-Muller on the two uniform streams.
    std::complex<double> complex_gaussian(uint64_t counter, double variance) const {
        if (variance <= 0.0) {
            return {0.0, 0.0};
        }
        const double radius = std::sqrt(-variance * std::log(uniform_open(counter)));
        const double angle = 2.0 * kPi * uniform(counter);
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }
};

}  // namespace nrems
