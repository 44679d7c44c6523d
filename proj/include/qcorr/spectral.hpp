#pragma once

#include <cstddef>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

// Resolution of a Hermitian matrix into distinct real eigenvalues and the
// orthogonal projections onto their eigenspaces. Values are strictly
// increasing; projections may have rank > 1 (degeneracy is first-class).
struct SpectralDecomposition {
    std::vector<double> values;
    std::vector<ComplexMatrix> projections;

    std::size_t size() const { return values.size(); }
    std::size_t dim() const { return projections.empty() ? 0 : projections.front().rows(); }

    // Sum_x x E(x)
    ComplexMatrix reconstruct() const;
    // Sum_x E(x); should be the identity
    ComplexMatrix resolution_sum() const;
};

// Eigendecompose a Hermitian matrix, merging raw eigenvalues whose adjacent
// gap is <= cluster_tol * max(1, spectral radius) into one spectral value
// (the mean of the merged group). Deterministic for identical inputs.
// Throws NotHermitian.
SpectralDecomposition spectral_decompose(const ComplexMatrix& m,
                                         double cluster_tol = defaults::cluster_tol);

// Raw ascending eigenvalues of a Hermitian matrix (no clustering).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Orthogonal projection onto ran(p) ∩ ran(q), computed as the eigenspace of
// p·q·p with eigenvalue within tol of 1. Throws NotProjection.
ComplexMatrix subspace_intersection_projection(const ComplexMatrix& p,
                                               const ComplexMatrix& q,
                                               double tol = defaults::intersection_tol);

// Hermitian matrix together with its spectral decomposition.
struct Observable {
    ComplexMatrix matrix;
    SpectralDecomposition spectral;

    static Observable from_matrix(const ComplexMatrix& m,
                                  double cluster_tol = defaults::cluster_tol);
    // Adopt an externally built decomposition (validated: value count,
    // dimension, reconstruction).
    static Observable from_parts(ComplexMatrix m, SpectralDecomposition s);

    std::size_t dim() const { return matrix.rows(); }
    const std::vector<double>& values() const { return spectral.values; }
    const ComplexMatrix& projection(std::size_t i) const { return spectral.projections[i]; }
};

// A (x) I_k and I_h (x) M with spectral decompositions formed directly from
// the factor's (values unchanged, projections tensored with the identity).
Observable tensor_right_identity(const Observable& a, std::size_t dim_k);
Observable tensor_left_identity(std::size_t dim_h, const Observable& m);

// Unit vector spanning the range of a rank-1 projection (largest column,
// normalized; deterministic). Throws NotProjection when the rank is not 1.
CVec rank1_range_vector(const ComplexMatrix& p);

} // namespace qcorr
