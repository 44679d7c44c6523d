#include "qcorr/cyclic.hpp"

#include <cmath>

#include "qcorr/correlation.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/value_match.hpp"

namespace qcorr {

CyclicSubspace cyclic_subspace(const Observable& x, const StateVector& psi,
                               double drop_tol) {
    if (x.dim() != psi.dim())
        throw DimensionMismatch("cyclic_subspace: observable and state dimensions differ");

    CyclicSubspace c;
    for (std::size_t i = 0; i < x.spectral.size(); ++i) {
        CVec v = x.projection(i) * psi;
        // vectors from distinct eigenspaces are already orthogonal; one
        // Gram-Schmidt sweep removes the numerical residue
        for (const auto& b : c.basis) v = v - inner(b, v) * b;
        const double n = norm(v);
        if (n <= drop_tol) continue;
        c.basis.push_back(cxd{1.0 / n, 0.0} * v);
        c.basis_values.push_back(x.spectral.values[i]);
    }
    c.projection = ComplexMatrix(psi.dim(), psi.dim());
    for (const auto& b : c.basis) c.projection = c.projection + outer(b);
    return c;
}

StateVector sample_unit_vector(const CyclicSubspace& c, Rng& rng) {
    CVec v(c.projection.rows(), cxd{0.0, 0.0});
    for (const auto& b : c.basis) {
        const cxd coeff = rng.gaussian_complex();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeff * b[i];
    }
    return StateVector::normalized(std::move(v));
}

Theorem2Report theorem2_report(const Observable& x, const Observable& y,
                               const StateVector& psi,
                               double tol, int sphere_samples, std::uint64_t seed) {
    if (x.dim() != psi.dim() || y.dim() != psi.dim())
        throw DimensionMismatch("theorem2_report: dimensions differ");

    Theorem2Report r;
    r.tol = tol;
    r.seed = seed;

    r.cond_i = is_perfectly_correlated(x, y, psi, tol).perfectly_correlated;

    const CyclicSubspace c = cyclic_subspace(x, psi);

    // (ii) is a seeded spot-check over the unit sphere of C(X,psi); the
    // finite decision is carried by (iii)-(v). psi is itself a point of
    // that sphere and is always checked first.
    Rng rng(seed);
    r.cond_ii = r.cond_i;
    for (int s = 0; r.cond_ii && s < sphere_samples; ++s) {
        const StateVector phi = sample_unit_vector(c, rng);
        if (!is_perfectly_correlated(x, y, phi, tol).perfectly_correlated)
            r.cond_ii = false;
    }

    const auto matching = match_values(x.spectral.values, y.spectral.values);

    r.cond_iii = true;
    for (const auto& [i, j] : matching.pairs)
        if (norm(x.projection(i) * psi - y.projection(j) * psi) > tol)
            r.cond_iii = false;
    for (std::size_t i : matching.unmatched_xs)
        if (norm(x.projection(i) * psi) > tol) r.cond_iii = false;
    for (std::size_t j : matching.unmatched_ys)
        if (norm(y.projection(j) * psi) > tol) r.cond_iii = false;

    r.cond_iv = true;
    for (const auto& [i, j] : matching.pairs)
        if (max_abs_diff(x.projection(i) * c.projection, y.projection(j) * c.projection) > tol)
            r.cond_iv = false;
    for (std::size_t i : matching.unmatched_xs)
        if (max_abs(x.projection(i) * c.projection) > tol) r.cond_iv = false;
    for (std::size_t j : matching.unmatched_ys)
        if (max_abs(y.projection(j) * c.projection) > tol) r.cond_iv = false;

    r.cond_v = max_abs_diff(x.matrix * c.projection, y.matrix * c.projection) <= tol;

    return r;
}

std::optional<CommonEigenstateDecomposition>
common_eigenstate_decomposition(const Observable& x, const Observable& y,
                                const StateVector& psi,
                                double tol, double value_match_tol) {
    if (x.dim() != psi.dim() || y.dim() != psi.dim())
        throw DimensionMismatch("common_eigenstate_decomposition: dimensions differ");

    const auto matching = match_values(x.spectral.values, y.spectral.values, value_match_tol);

    CommonEigenstateDecomposition d;
    CVec total(psi.dim(), cxd{0.0, 0.0});
    for (const auto& [i, j] : matching.pairs) {
        const ComplexMatrix q =
            subspace_intersection_projection(x.projection(i), y.projection(j));
        CVec component = q * psi;
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += component[k];
        d.values.push_back(x.spectral.values[i]);
        d.components.push_back(std::move(component));
    }

    if (norm(total - psi.amplitudes()) > tol) return std::nullopt;
    return d;
}

bool equal_distribution_certificate(const Observable& x, const Observable& y,
                                    const StateVector& psi, double tol) {
    if (x.dim() != psi.dim() || y.dim() != psi.dim())
        throw DimensionMismatch("equal_distribution_certificate: dimensions differ");

    const CyclicSubspace c = cyclic_subspace(x, psi);
    for (std::size_t n = 0; n < c.dim(); ++n) {
        const CVec yb = y.matrix * c.basis[n];
        if (norm(yb - cxd{c.basis_values[n], 0.0} * c.basis[n]) > tol) return false;
    }
    return true;
}

} // namespace qcorr
