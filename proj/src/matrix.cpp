#include "qcorr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/kernels.hpp"

namespace qcorr {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DimensionMismatch(what);
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cxd{0.0, 0.0}) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("matrix dimensions must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("matrix dimensions must be >= 1");
    if (entries_.size() != rows * cols)
        throw DimensionMismatch("entry count does not match rows x cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cxd>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw DimensionMismatch("matrix dimensions must be >= 1");
    cols_ = rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    if (cols_ == 0) throw DimensionMismatch("matrix dimensions must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cxd{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

cxd ComplexMatrix::trace() const {
    require(is_square(), "trace requires a square matrix");
    cxd t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        out.data()[i] = a.data()[i] + b.data()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        out.data()[i] = a.data()[i] - b.data()[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), "matrix product shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    kernels::matmul(a.data(), b.data(), out.data(), a.rows(), a.cols(), b.cols());
    return out;
}

ComplexMatrix operator*(cxd s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        out.data()[i] = s * a.data()[i];
    return out;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix comparison shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) return false;
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <= tol;
}

bool is_projection(const ComplexMatrix& m, double tol) {
    return is_hermitian(m, tol) && max_abs_diff(m * m, m) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    kernels::kron(a.data(), b.data(), out.data(), a.rows(), a.cols(), b.rows(), b.cols());
    return out;
}

CVec kron(const CVec& u, const CVec& v) {
    CVec out(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i * v.size() + j] = u[i] * v[j];
    return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& t,
                                   std::size_t dim_h, std::size_t dim_k) {
    require(t.is_square() && t.rows() == dim_h * dim_k,
            "partial trace: operator dimension is not dim_h * dim_k");
    ComplexMatrix out(dim_h, dim_h);
    kernels::partial_trace_second(t.data(), out.data(), dim_h, dim_k);
    return out;
}

cxd inner(const CVec& u, const CVec& v) {
    require(u.size() == v.size(), "inner product dimension mismatch");
    cxd acc{0.0, 0.0};
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

double norm(const CVec& v) {
    double acc = 0.0;
    for (const auto& e : v) acc += std::norm(e);
    return std::sqrt(acc);
}

CVec operator-(const CVec& u, const CVec& v) {
    require(u.size() == v.size(), "vector difference dimension mismatch");
    CVec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
    return out;
}

CVec operator*(cxd s, const CVec& v) {
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

CVec operator*(const ComplexMatrix& m, const CVec& v) {
    require(m.cols() == v.size(), "matrix-vector dimension mismatch");
    CVec out(m.rows());
    kernels::matvec(m.data(), v.data(), out.data(), m.rows(), m.cols());
    return out;
}

cxd sandwich(const CVec& u, const ComplexMatrix& m, const CVec& v) {
    return inner(u, m * v);
}

ComplexMatrix outer(const CVec& u, const CVec& v) {
    ComplexMatrix out(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out(i, j) = u[i] * std::conj(v[j]);
    return out;
}

StateVector::StateVector(CVec amplitudes, double tol) : amp_(std::move(amplitudes)) {
    if (amp_.empty()) throw DimensionMismatch("state vector must have dimension >= 1");
    if (std::abs(norm(amp_) - 1.0) > tol)
        throw Error("state vector is not unit norm (norm = " + std::to_string(norm(amp_)) + ")");
}

StateVector::StateVector(std::initializer_list<cxd> amplitudes)
    : StateVector(CVec(amplitudes)) {}

StateVector StateVector::normalized(CVec v) {
    const double n = norm(v);
    if (n == 0.0) throw Error("cannot normalize the zero vector");
    for (auto& e : v) e /= n;
    // Bypass the tolerance check; the division above makes the norm exact
    // up to one rounding.
    StateVector s{CVec{cxd{1.0, 0.0}}};
    s.amp_ = std::move(v);
    return s;
}

StateVector StateVector::basis(std::size_t dim, std::size_t n) {
    if (n >= dim) throw DimensionMismatch("basis index out of range");
    CVec v(dim, cxd{0.0, 0.0});
    v[n] = cxd{1.0, 0.0};
    return StateVector(std::move(v));
}

StateVector kron(const StateVector& u, const StateVector& v) {
    return StateVector(kron(u.amplitudes(), v.amplitudes()));
}

CVec operator*(const ComplexMatrix& m, const StateVector& s) {
    return m * s.amplitudes();
}

cxd expectation(const ComplexMatrix& m, const StateVector& s) {
    return sandwich(s.amplitudes(), m, s.amplitudes());
}

} // namespace qcorr
