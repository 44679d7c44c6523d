#pragma once

#include <cstdint>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/spectral.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

// Indirect measurement model: probe space K with initial state xi, the
// measuring interaction U on H (x) K (system factor first), and the meter
// observable M read out on the probe.
struct MeasuringProcess {
    MeasuringProcess(std::size_t dim_h, std::size_t dim_k, StateVector probe_state,
                     ComplexMatrix unitary, Observable meter);

    std::size_t dim_h;
    std::size_t dim_k;
    StateVector probe_state;
    ComplexMatrix unitary;
    Observable meter;
};

// One positive effect per outcome value; effects sum to the identity.
struct Povm {
    std::vector<double> outcomes;
    std::vector<ComplexMatrix> effects;

    std::size_t size() const { return outcomes.size(); }
};

// U† (I (x) M) U as an observable on H (x) K, spectral decomposition
// recomputed from the conjugated matrix.
Observable heisenberg_meter(const MeasuringProcess& p);

// Pi(x) = Tr_K[ U† (I (x) E^M(x)) U (I (x) |xi><xi|) ], one effect per
// spectral value of the meter.
Povm povm_of(const MeasuringProcess& p);

struct OutcomeDistribution {
    std::vector<double> outcomes;
    std::vector<double> probabilities;
};

// Output distribution of the apparatus on input state psi, computed both as
// the full-space sandwich in U(psi (x) xi) and through the POVM; the two
// routes must agree within tol_op (asserted).
OutcomeDistribution output_distribution(const MeasuringProcess& p, const StateVector& psi);

// Output distribution equals the spectral distribution <psi|E^A(x)|psi> of
// the target observable (outcomes aligned within value_match_tol; missing
// outcomes count as probability zero).
bool satisfies_bsf(const MeasuringProcess& p, const Observable& a, const StateVector& psi,
                   double tol = defaults::tol_verdict,
                   double value_match_tol = defaults::value_match_tol);

// <psi|Pi(x)E^A(y)|psi> = 0 for all x != y.
bool povm_perfectly_correlated(const Povm& povm, const Observable& a, const StateVector& psi,
                               double tol = defaults::tol_verdict,
                               double value_match_tol = defaults::value_match_tol);

// Theorem-5 conditions: (i) the meter after the interaction is perfectly
// correlated with A (x) I in psi (x) xi, (ii) the POVM is perfectly
// correlated to A in psi, (iii) the BSF holds across the cyclic eigenbasis
// of C(A,psi) plus seeded random states of its unit sphere, (iv)
// Pi(x) P_{A,psi} = E^A(x) P_{A,psi} for all x.
struct PreciseMeasurementReport {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool cond_iv = false;
    std::vector<double> povm_outcomes;
    std::vector<double> povm_effect_norms;

    bool all() const { return cond_i && cond_ii && cond_iii && cond_iv; }
    bool consistent() const {
        return cond_i == cond_ii && cond_i == cond_iii && cond_i == cond_iv;
    }
};

PreciseMeasurementReport precise_measurement_report(const MeasuringProcess& p,
                                                    const Observable& a,
                                                    const StateVector& psi,
                                                    double tol = defaults::tol_verdict,
                                                    int sphere_samples = defaults::sphere_samples,
                                                    std::uint64_t seed = 0);

// State-independent notion: every effect equals the corresponding spectral
// projection of A.
bool is_precise_for_all_states(const MeasuringProcess& p, const Observable& a,
                               double tol = defaults::tol_op,
                               double value_match_tol = defaults::value_match_tol);

} // namespace qcorr
