#pragma once

#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/spectral.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

// All pairwise sandwiched projector products <psi|E^X(x)E^Y(y)|psi>.
// When every term is a nonnegative real, the table is a genuine joint
// probability distribution for the pair.
struct JointTermTable {
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::vector<cxd> terms; // row-major over (x, y)

    cxd term(std::size_t i, std::size_t j) const { return terms[i * y_values.size() + j]; }
    // Sum_y term(x_i, y); equals <psi|E^X(x_i)|psi> by the resolution of identity.
    cxd x_marginal(std::size_t i) const;
    cxd y_marginal(std::size_t j) const;
};

struct WorstViolation {
    double x = 0.0;
    double y = 0.0;
    cxd term{0.0, 0.0};
};

struct CorrelationVerdict {
    bool jointly_distributed = false;
    bool perfectly_correlated = false;
    bool equally_distributed = false;
    double rms_difference = 0.0;
    // Largest |term| among pairs with x != y (the witness when
    // perfectly_correlated is false).
    WorstViolation worst_violation;
    // term(x,y) = delta_{x,y} <psi|E^X(x)|psi> across the whole table.
    bool kronecker_form = false;
};

JointTermTable joint_term_table(const Observable& x, const Observable& y,
                                const StateVector& psi);

// True iff every term has real part >= -tol and |imaginary part| <= tol.
// When true, the conjugate-symmetry relation
// <psi|E^X E^Y|psi> = <psi|E^Y E^X|psi> holds within 2*tol and is asserted.
bool is_jointly_distributed(const JointTermTable& table, double tol = defaults::tol_verdict);

CorrelationVerdict is_perfectly_correlated(const Observable& x, const Observable& y,
                                           const StateVector& psi,
                                           double tol = defaults::tol_verdict,
                                           double value_match_tol = defaults::value_match_tol);

// ||X psi - Y psi||; also asserts the expansion
// ||X psi - Y psi||^2 = Sum_{x,y} (x-y)^2 Re <psi|E^X(x)E^Y(y)|psi>.
double rms_difference(const Observable& x, const Observable& y, const StateVector& psi);

// Instance check of the biconditional: perfectly correlated iff jointly
// distributed and X psi = Y psi. Must hold on every input.
bool check_theorem1(const Observable& x, const Observable& y, const StateVector& psi,
                    double tol = defaults::tol_verdict);

} // namespace qcorr
