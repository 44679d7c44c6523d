#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

using cxd = std::complex<double>;

// Working (not necessarily normalized) complex vector.
using CVec = std::vector<cxd>;

// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cxd>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const cxd* data() const { return entries_.data(); }
    cxd* data() { return entries_.data(); }
    const std::vector<cxd>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    cxd trace() const;

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cxd s, const ComplexMatrix& a);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol = defaults::tol_herm);
bool is_unitary(const ComplexMatrix& m, double tol = defaults::tol_op);
// Hermitian idempotent within tol (max-abs-entry on both checks).
bool is_projection(const ComplexMatrix& m, double tol = defaults::tol_op);

// Kronecker product; dimension = product of dimensions.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
CVec kron(const CVec& u, const CVec& v);

// Trace over the second tensor factor of an operator on H (x) K.
ComplexMatrix partial_trace_second(const ComplexMatrix& t,
                                   std::size_t dim_h, std::size_t dim_k);

// Complex inner product, conjugate-linear in the first argument.
cxd inner(const CVec& u, const CVec& v);
double norm(const CVec& v);
CVec operator-(const CVec& u, const CVec& v);
CVec operator*(cxd s, const CVec& v);

CVec operator*(const ComplexMatrix& m, const CVec& v);
// <u| m |v>
cxd sandwich(const CVec& u, const ComplexMatrix& m, const CVec& v);
// |u><v|
ComplexMatrix outer(const CVec& u, const CVec& v);
inline ComplexMatrix outer(const CVec& u) { return outer(u, u); }

// Unit-norm complex vector in a finite-dimensional Hilbert space.
class StateVector {
public:
    explicit StateVector(CVec amplitudes, double tol = defaults::tol_norm);
    StateVector(std::initializer_list<cxd> amplitudes);

    // Rescales the input to unit norm (throws on the zero vector).
    static StateVector normalized(CVec v);
    // n-th standard basis vector of the given dimension.
    static StateVector basis(std::size_t dim, std::size_t n);

    std::size_t dim() const { return amp_.size(); }
    const CVec& amplitudes() const { return amp_; }
    const cxd& operator[](std::size_t i) const { return amp_[i]; }

private:
    CVec amp_;
};

StateVector kron(const StateVector& u, const StateVector& v);
CVec operator*(const ComplexMatrix& m, const StateVector& s);
cxd expectation(const ComplexMatrix& m, const StateVector& s);

} // namespace qcorr
