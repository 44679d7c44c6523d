#pragma once

namespace qcorr::defaults {

// Operator comparisons use the max-absolute-entry norm throughout.
inline constexpr double tol_op = 1e-9;

// Hermiticity check: max |m - m†| entry.
inline constexpr double tol_herm = 1e-9;

// Unit-norm check for state vectors, and drop threshold for vanishing
// spectral components when building cyclic subspaces.
inline constexpr double tol_norm = 1e-9;

// Relative gap below which two raw eigenvalues are merged into one
// spectral value (scaled by max(1, spectral radius)).
inline constexpr double cluster_tol = 1e-8;

// Two outcome values from different spectra count as "the same value"
// when they differ by at most this (absolute).
inline constexpr double value_match_tol = 1e-8;

// Verdict thresholds (joint terms, correlation checks, BSF probabilities).
inline constexpr double tol_verdict = 1e-9;

// Acceptance window |λ - 1| for the eigenvalue-1 eigenspace of p·q·p when
// intersecting projection ranges.
inline constexpr double intersection_tol = 1e-8;

// POVM effects must have min eigenvalue >= -tol_psd.
inline constexpr double tol_psd = 1e-9;

// Random unit vectors drawn inside a cyclic subspace for the Theorem 2
// condition (ii) spot-check.
inline constexpr int sphere_samples = 32;

} // namespace qcorr::defaults
