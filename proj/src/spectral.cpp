#include "qcorr/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return e;
}

// P += sum over the given eigenvector columns of |v><v|, computed entrywise
// so the result is exactly Hermitian.
ComplexMatrix projection_from_columns(const Eigen::MatrixXcd& vecs,
                                      std::size_t first, std::size_t count) {
    const std::size_t n = static_cast<std::size_t>(vecs.rows());
    ComplexMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cxd acc{0.0, 0.0};
            for (std::size_t c = first; c < first + count; ++c)
                acc += vecs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) *
                       std::conj(vecs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)));
            p(i, j) = acc;
        }
    }
    return p;
}

} // namespace

ComplexMatrix SpectralDecomposition::reconstruct() const {
    ComplexMatrix acc(dim(), dim());
    for (std::size_t i = 0; i < size(); ++i)
        acc = acc + cxd{values[i], 0.0} * projections[i];
    return acc;
}

ComplexMatrix SpectralDecomposition::resolution_sum() const {
    ComplexMatrix acc(dim(), dim());
    for (const auto& p : projections) acc = acc + p;
    return acc;
}

SpectralDecomposition spectral_decompose(const ComplexMatrix& m, double cluster_tol) {
    if (!m.is_square())
        throw NotHermitian("spectral_decompose: matrix is not square");
    if (!is_hermitian(m))
        throw NotHermitian("spectral_decompose: matrix is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
    if (solver.info() != Eigen::Success)
        throw Error("spectral_decompose: eigensolver failed to converge");

    const auto& raw = solver.eigenvalues(); // ascending
    const std::size_t n = m.rows();
    const double radius = std::max(std::abs(raw(0)), std::abs(raw(static_cast<Eigen::Index>(n) - 1)));
    const double gap = cluster_tol * std::max(1.0, radius);

    SpectralDecomposition out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || raw(static_cast<Eigen::Index>(i)) - raw(static_cast<Eigen::Index>(i - 1)) > gap) {
            const std::size_t count = i - start;
            double mean = 0.0;
            for (std::size_t c = start; c < i; ++c) mean += raw(static_cast<Eigen::Index>(c));
            mean /= static_cast<double>(count);
            out.values.push_back(mean);
            out.projections.push_back(projection_from_columns(solver.eigenvectors(), start, count));
            start = i;
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!is_hermitian(m))
        throw NotHermitian("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eigenvalues: eigensolver failed to converge");
    std::vector<double> out(m.rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    return out;
}

ComplexMatrix subspace_intersection_projection(const ComplexMatrix& p,
                                               const ComplexMatrix& q,
                                               double tol) {
    if (p.rows() != q.rows() || p.cols() != q.cols())
        throw DimensionMismatch("subspace_intersection_projection: shape mismatch");
    if (!is_projection(p))
        throw NotProjection("subspace_intersection_projection: first argument is not a projection");
    if (!is_projection(q))
        throw NotProjection("subspace_intersection_projection: second argument is not a projection");

    ComplexMatrix t = p * q * p;
    // kill the accumulated asymmetry before handing it to the eigensolver
    t = cxd{0.5, 0.0} * (t + t.adjoint());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(t));
    if (solver.info() != Eigen::Success)
        throw Error("subspace_intersection_projection: eigensolver failed to converge");

    const std::size_t n = p.rows();
    ComplexMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (std::abs(solver.eigenvalues()(static_cast<Eigen::Index>(c)) - 1.0) <= tol) {
            ComplexMatrix rank1 = projection_from_columns(solver.eigenvectors(), c, 1);
            out = out + rank1;
        }
    }
    return out;
}

Observable Observable::from_matrix(const ComplexMatrix& m, double cluster_tol) {
    Observable obs{m, spectral_decompose(m, cluster_tol)};
    return obs;
}

Observable Observable::from_parts(ComplexMatrix m, SpectralDecomposition s) {
    if (s.dim() != m.rows() || !m.is_square())
        throw DimensionMismatch("Observable::from_parts: decomposition dimension mismatch");
    const double scale = std::max(1.0, max_abs(m));
    if (max_abs_diff(s.reconstruct(), m) > defaults::tol_op * scale)
        throw InternalCheckFailure("Observable::from_parts: decomposition does not reconstruct the matrix");
    return Observable{std::move(m), std::move(s)};
}

Observable tensor_right_identity(const Observable& a, std::size_t dim_k) {
    const ComplexMatrix idk = ComplexMatrix::identity(dim_k);
    SpectralDecomposition s;
    s.values = a.spectral.values;
    s.projections.reserve(a.spectral.size());
    for (const auto& p : a.spectral.projections) s.projections.push_back(kron(p, idk));
    return Observable{kron(a.matrix, idk), std::move(s)};
}

CVec rank1_range_vector(const ComplexMatrix& p) {
    if (!is_projection(p) || std::abs(p.trace() - cxd{1.0, 0.0}) > 1e-6)
        throw NotProjection("rank1_range_vector: not a rank-1 projection");
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < p.cols(); ++j) {
        double cn = 0.0;
        for (std::size_t i = 0; i < p.rows(); ++i) cn += std::norm(p(i, j));
        if (cn > best_norm) {
            best_norm = cn;
            best = j;
        }
    }
    CVec v(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) v[i] = p(i, best);
    const double n = norm(v);
    for (auto& e : v) e /= n;
    return v;
}

Observable tensor_left_identity(std::size_t dim_h, const Observable& m) {
    const ComplexMatrix idh = ComplexMatrix::identity(dim_h);
    SpectralDecomposition s;
    s.values = m.spectral.values;
    s.projections.reserve(m.spectral.size());
    for (const auto& p : m.spectral.projections) s.projections.push_back(kron(idh, p));
    return Observable{kron(idh, m.matrix), std::move(s)};
}

} // namespace qcorr
