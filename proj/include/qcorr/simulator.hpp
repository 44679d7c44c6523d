#pragma once

#include <cstdint>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/spectral.hpp"

namespace qcorr {

// Empirical vs theoretical outcome statistics of a seeded sampling run.
// Keys hold one value (indirect runs) or an (x, y) pair (consecutive runs).
struct SampleReport {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> keys;
    std::vector<double> empirical;   // frequencies; sum to 1
    std::vector<double> theoretical; // probabilities on the same keys
    double max_abs_deviation = 0.0;
    double total_variation = 0.0;
    // an empirical key fell outside the theoretical support (flagged, never
    // expected: sampling only draws in-support outcomes)
    bool off_support = false;

    bool operator==(const SampleReport&) const = default;
};

// Consecutive projective measurements: sample x from ||E^X(x) psi||^2,
// Lüders-collapse to E^X(x) psi normalized, then sample y in the collapsed
// state. Theoretical reference: ||E^Y(y)E^X(x) psi||^2. Inverse-CDF over
// outcomes in increasing spectral order, one uniform variate per
// measurement; bit-reproducible given the seed.
SampleReport simulate_consecutive(const Observable& x, const Observable& y,
                                  const StateVector& psi,
                                  std::uint64_t shots, std::uint64_t seed);

// Meter readout of an indirect measurement: sample the distribution of M in
// the evolved state U(psi (x) xi). Theoretical reference:
// output_distribution(p, psi).
SampleReport simulate_indirect(const MeasuringProcess& p, const StateVector& psi,
                               std::uint64_t shots, std::uint64_t seed);

} // namespace qcorr
