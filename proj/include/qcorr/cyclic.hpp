#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/spectral.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

// The smallest X-invariant subspace containing psi, spanned by the nonzero
// projected vectors E^X(x) psi. Each basis vector is an eigenvector of X;
// basis_values[i] is its eigenvalue.
struct CyclicSubspace {
    std::vector<CVec> basis;
    std::vector<double> basis_values;
    ComplexMatrix projection;

    std::size_t dim() const { return basis.size(); }
};

CyclicSubspace cyclic_subspace(const Observable& x, const StateVector& psi,
                               double drop_tol = defaults::tol_norm);

// Random unit vector inside the subspace: standard-normal complex
// coefficients over the orthonormal basis, then normalized.
StateVector sample_unit_vector(const CyclicSubspace& c, Rng& rng);

// The five equivalent conditions: (i) perfect correlation in psi,
// (ii) perfect correlation in sampled states of the unit sphere of C(X,psi),
// (iii) E^X(x) psi = E^Y(x) psi for every x in the union of spectra,
// (iv) E^X(x) P = E^Y(x) P for every such x, (v) X P = Y P.
struct Theorem2Report {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool cond_iv = false;
    bool cond_v = false;
    double tol = defaults::tol_verdict;
    std::uint64_t seed = 0;

    bool all() const { return cond_i && cond_ii && cond_iii && cond_iv && cond_v; }
    bool consistent() const {
        return cond_i == cond_ii && cond_i == cond_iii && cond_i == cond_iv && cond_i == cond_v;
    }
};

Theorem2Report theorem2_report(const Observable& x, const Observable& y,
                               const StateVector& psi,
                               double tol = defaults::tol_verdict,
                               int sphere_samples = defaults::sphere_samples,
                               std::uint64_t seed = 0);

// psi written as a superposition of common eigenstates of X and Y with
// common eigenvalues: one component Q(x) psi per shared spectral value,
// where Q(x) projects onto ran E^X(x) ∩ ran E^Y(x). Empty when psi is not
// such a superposition (exactly the non-perfectly-correlated case).
struct CommonEigenstateDecomposition {
    std::vector<double> values;
    std::vector<CVec> components;
};

std::optional<CommonEigenstateDecomposition>
common_eigenstate_decomposition(const Observable& x, const Observable& y,
                                const StateVector& psi,
                                double tol = defaults::tol_verdict,
                                double value_match_tol = defaults::value_match_tol);

// Finite certificate for equal distribution in every state of the unit
// sphere of C(X,psi): Y fixes each cyclic eigenbasis vector with the same
// eigenvalue as X. Equals perfect correlation on every instance.
bool equal_distribution_certificate(const Observable& x, const Observable& y,
                                    const StateVector& psi,
                                    double tol = defaults::tol_verdict);

} // namespace qcorr
