#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/spectral.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

// First, second and third moments of both observables of a pair in a state.
struct MomentTable {
    std::array<double, 3> x_moments{};
    std::array<double, 3> y_moments{};
};

// A pair of Heisenberg-picture snapshots of one observable: Y = U† X U with
// evolution U, evaluated in a fixed state.
struct HeisenbergPairFixture {
    Observable x;
    Observable y;
    ComplexMatrix evolution;
    StateVector psi;
    MomentTable moments;
};

// Premeasurement model: U maps phi_n (x) xi to phi_n (x) xi_n over the
// chosen eigenbasis {phi_n} of A; the meter carries the eigenvalues a_n on
// the pointer basis {xi_n}.
struct VonNeumannModel {
    Observable system_observable;
    std::vector<CVec> eigenbasis;
    std::vector<double> eigenvalues;
    MeasuringProcess process;
};

struct VonNeumannReport {
    // A (x) I = U†(A (x) I)U = U†(I (x) M)U restricted to H (x) [xi]
    bool operator_identity = false;
    // meter after the interaction perfectly correlated with A before it
    bool value_reproducing = false;
    // measured observable after the interaction perfectly correlated with
    // the meter after it
    bool repeatability = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    bool all() const { return operator_identity && value_reproducing && repeatability; }
};

// Build the premeasurement unitary for A with probe K of the same dimension.
// xi is the standard basis vector at xi_index; the basis {eta_m} extends it
// (eta_0 = xi, remaining standard vectors in order), and U is completed as
// the per-n cyclic shift phi_n (x) eta_m -> phi_n (x) eta_{(m+n) mod d}.
// Throws NotEigenbasis if the supplied basis does not diagonalize A.
VonNeumannModel build_von_neumann(const Observable& a,
                                  const std::vector<CVec>& eigenbasis,
                                  std::size_t xi_index = 0);

// Convenience: eigenbasis taken from the spectral decomposition of A
// (requires nondegenerate spectrum so the choice is canonical).
VonNeumannModel build_von_neumann(const Observable& a, std::size_t xi_index = 0);

VonNeumannReport verify_von_neumann(const VonNeumannModel& m, std::size_t psi_samples,
                                    std::uint64_t seed, double tol = defaults::tol_verdict);

// The 4x4 pair with A(t1) psi = A(t2) psi and matching first and second
// moments whose third moments differ (4 against 3).
HeisenbergPairFixture ozawa_counterexample();

// X = B (x) I and Y = I (x) B in the product state phi (x) phi: equally
// distributed, and statistically independent unless phi is an eigenstate.
struct ProductStateExample {
    HeisenbergPairFixture fixture;
    bool equally_distributed = false;
    // every joint term factors into the product of the two marginals
    bool statistically_independent = false;
};

ProductStateExample product_state_example(const Observable& b, const StateVector& phi,
                                          double tol = defaults::tol_verdict);

} // namespace qcorr
