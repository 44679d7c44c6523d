#include "qcorr/measurement.hpp"

#include <cmath>

#include "qcorr/correlation.hpp"
#include "qcorr/cyclic.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/value_match.hpp"

namespace qcorr {

MeasuringProcess::MeasuringProcess(std::size_t dim_h_, std::size_t dim_k_,
                                   StateVector probe_state_, ComplexMatrix unitary_,
                                   Observable meter_)
    : dim_h(dim_h_), dim_k(dim_k_), probe_state(std::move(probe_state_)),
      unitary(std::move(unitary_)), meter(std::move(meter_)) {
    if (probe_state.dim() != dim_k)
        throw DimensionMismatch("MeasuringProcess: probe state must live on K");
    if (meter.dim() != dim_k)
        throw DimensionMismatch("MeasuringProcess: meter must act on K");
    if (unitary.rows() != dim_h * dim_k || unitary.cols() != dim_h * dim_k)
        throw DimensionMismatch("MeasuringProcess: interaction must act on H (x) K");
    if (!is_unitary(unitary))
        throw Error("MeasuringProcess: interaction is not unitary within tolerance");
}

Observable heisenberg_meter(const MeasuringProcess& p) {
    const ComplexMatrix meter_full =
        kron(ComplexMatrix::identity(p.dim_h), p.meter.matrix);
    return Observable::from_matrix(p.unitary.adjoint() * meter_full * p.unitary);
}

Povm povm_of(const MeasuringProcess& p) {
    const ComplexMatrix id_h = ComplexMatrix::identity(p.dim_h);
    const ComplexMatrix probe_proj = kron(id_h, outer(p.probe_state.amplitudes()));
    const ComplexMatrix u_dag = p.unitary.adjoint();

    Povm povm;
    povm.outcomes = p.meter.spectral.values;
    povm.effects.reserve(povm.outcomes.size());
    for (std::size_t i = 0; i < p.meter.spectral.size(); ++i) {
        const ComplexMatrix conjugated =
            u_dag * kron(id_h, p.meter.projection(i)) * p.unitary;
        povm.effects.push_back(partial_trace_second(conjugated * probe_proj, p.dim_h, p.dim_k));
    }
    return povm;
}

OutcomeDistribution output_distribution(const MeasuringProcess& p, const StateVector& psi) {
    if (psi.dim() != p.dim_h)
        throw DimensionMismatch("output_distribution: state must live on H");

    const CVec evolved = p.unitary * kron(psi, p.probe_state).amplitudes();
    const ComplexMatrix id_h = ComplexMatrix::identity(p.dim_h);
    const Povm povm = povm_of(p);

    OutcomeDistribution dist;
    dist.outcomes = p.meter.spectral.values;
    double sum = 0.0;
    for (std::size_t i = 0; i < p.meter.spectral.size(); ++i) {
        const CVec projected = kron(id_h, p.meter.projection(i)) * evolved;
        const double prob = norm(projected) * norm(projected);
        const double via_povm = expectation(povm.effects[i], psi).real();
        if (std::abs(prob - via_povm) > defaults::tol_op)
            throw InternalCheckFailure(
                "output_distribution: full-space and POVM probabilities disagree");
        if (prob < -defaults::tol_verdict)
            throw InternalCheckFailure("output_distribution: negative probability");
        dist.probabilities.push_back(prob);
        sum += prob;
    }
    if (std::abs(sum - 1.0) > defaults::tol_op * static_cast<double>(dist.outcomes.size()))
        throw InternalCheckFailure("output_distribution: probabilities do not sum to one");
    return dist;
}

bool satisfies_bsf(const MeasuringProcess& p, const Observable& a, const StateVector& psi,
                   double tol, double value_match_tol) {
    if (a.dim() != p.dim_h)
        throw DimensionMismatch("satisfies_bsf: target observable must act on H");

    const OutcomeDistribution dist = output_distribution(p, psi);
    const auto matching = match_values(dist.outcomes, a.spectral.values, value_match_tol);

    for (const auto& [i, j] : matching.pairs)
        if (std::abs(dist.probabilities[i] - expectation(a.projection(j), psi).real()) > tol)
            return false;
    for (std::size_t i : matching.unmatched_xs)
        if (std::abs(dist.probabilities[i]) > tol) return false;
    for (std::size_t j : matching.unmatched_ys)
        if (std::abs(expectation(a.projection(j), psi).real()) > tol) return false;
    return true;
}

bool povm_perfectly_correlated(const Povm& povm, const Observable& a, const StateVector& psi,
                               double tol, double value_match_tol) {
    if (povm.effects.empty() || povm.effects.front().rows() != psi.dim() || a.dim() != psi.dim())
        throw DimensionMismatch("povm_perfectly_correlated: dimensions differ");

    for (std::size_t i = 0; i < povm.size(); ++i) {
        const CVec effect_psi = povm.effects[i] * psi;
        for (std::size_t j = 0; j < a.spectral.size(); ++j) {
            if (std::abs(povm.outcomes[i] - a.spectral.values[j]) <= value_match_tol) continue;
            // <psi|Pi(x)E^A(y)|psi> with Hermitian Pi(x)
            if (std::abs(inner(effect_psi, a.projection(j) * psi)) > tol) return false;
        }
    }
    return true;
}

PreciseMeasurementReport precise_measurement_report(const MeasuringProcess& p,
                                                    const Observable& a,
                                                    const StateVector& psi,
                                                    double tol, int sphere_samples,
                                                    std::uint64_t seed) {
    if (a.dim() != p.dim_h || psi.dim() != p.dim_h)
        throw DimensionMismatch("precise_measurement_report: dimensions differ");

    PreciseMeasurementReport r;

    const Povm povm = povm_of(p);
    r.povm_outcomes = povm.outcomes;
    for (const auto& e : povm.effects) r.povm_effect_norms.push_back(max_abs(e));

    const Observable a_full = tensor_right_identity(a, p.dim_k);
    const Observable meter_after = heisenberg_meter(p);
    const StateVector joint = kron(psi, p.probe_state);
    r.cond_i = is_perfectly_correlated(a_full, meter_after, joint, tol).perfectly_correlated;

    r.cond_ii = povm_perfectly_correlated(povm, a, psi, tol);

    // (iii): the BSF over all of C_1(A,psi) reduces to the cyclic eigenbasis
    // (a point-mass meter distribution in an eigenbasis state forces that
    // state to be a meter eigenvector); random sphere states cross-check.
    const CyclicSubspace cyc = cyclic_subspace(a, psi);
    r.cond_iii = true;
    for (std::size_t n = 0; r.cond_iii && n < cyc.dim(); ++n)
        if (!satisfies_bsf(p, a, StateVector::normalized(cyc.basis[n]), tol))
            r.cond_iii = false;
    Rng rng(seed);
    for (int s = 0; r.cond_iii && s < sphere_samples; ++s)
        if (!satisfies_bsf(p, a, sample_unit_vector(cyc, rng), tol))
            r.cond_iii = false;

    const auto matching = match_values(povm.outcomes, a.spectral.values);
    r.cond_iv = true;
    for (const auto& [i, j] : matching.pairs)
        if (max_abs_diff(povm.effects[i] * cyc.projection,
                         a.projection(j) * cyc.projection) > tol)
            r.cond_iv = false;
    for (std::size_t i : matching.unmatched_xs)
        if (max_abs(povm.effects[i] * cyc.projection) > tol) r.cond_iv = false;
    for (std::size_t j : matching.unmatched_ys)
        if (max_abs(a.projection(j) * cyc.projection) > tol) r.cond_iv = false;

    return r;
}

bool is_precise_for_all_states(const MeasuringProcess& p, const Observable& a,
                               double tol, double value_match_tol) {
    if (a.dim() != p.dim_h)
        throw DimensionMismatch("is_precise_for_all_states: target observable must act on H");

    const Povm povm = povm_of(p);
    const auto matching = match_values(povm.outcomes, a.spectral.values, value_match_tol);

    for (const auto& [i, j] : matching.pairs)
        if (max_abs_diff(povm.effects[i], a.projection(j)) > tol) return false;
    for (std::size_t i : matching.unmatched_xs)
        if (max_abs(povm.effects[i]) > tol) return false;
    // a spectral projection of A is never the zero operator, so an
    // unmatched value of A rules the process out
    if (!matching.unmatched_ys.empty()) return false;
    return true;
}

} // namespace qcorr
