#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qcorr/matrix.hpp"

namespace qcorr {

// Seeded random source for every stochastic procedure in the toolkit.
//
// The generator is std::mt19937_64 (a named, fully specified algorithm),
// seeded directly with the 64-bit seed. Uniform variates take the top 53
// bits of one output word: u = (next() >> 11) / 2^53. Gaussians come from
// Box-Muller on two uniforms. Ports in other languages that follow this
// recipe reproduce sequences, and therefore sampled counts, exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Standard normal; consumes exactly two uniforms.
    double gaussian() {
        double u1 = uniform();
        if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Complex with independent standard-normal real and imaginary parts.
    cxd gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return cxd{re, im};
    }

    std::uint64_t next_word() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// Seed for the i-th member of a batch run derived from a base seed.
inline std::uint64_t derived_seed(std::uint64_t base, std::uint64_t index) {
    return base + index;
}

} // namespace qcorr
