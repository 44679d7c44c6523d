#pragma once

#include <complex>
#include <cstddef>

// Dense complex kernels. Every kernel exists twice: the serial reference in
// kernels::serial, and the OpenMP version below it. The parallel versions
// compute each output entry in one thread with the same inner-loop order as
// the reference, so results are bit-identical regardless of thread count;
// tests and the benchmark target rely on that.

namespace qcorr::kernels {

using cxd = std::complex<double>;

// Work (in fused multiply-adds) below which the OpenMP versions stay on one
// thread; chosen so desk-scale operators (dim <= 64) skip thread startup.
inline constexpr std::size_t parallel_grain = 1u << 18;

namespace serial {

// c = a (n x k) * b (k x m), all row-major
void matmul(const cxd* a, const cxd* b, cxd* c,
            std::size_t n, std::size_t k, std::size_t m);

// y = a (n x m) * x (m)
void matvec(const cxd* a, const cxd* x, cxd* y,
            std::size_t n, std::size_t m);

// c = a (n x m) kron b (p x q), row-major, c is (n.p x m.q)
void kron(const cxd* a, const cxd* b, cxd* c,
          std::size_t n, std::size_t m, std::size_t p, std::size_t q);

// out (dh x dh) = Tr_K of t ((dh.dk) x (dh.dk)), second factor traced out
void partial_trace_second(const cxd* t, cxd* out,
                          std::size_t dh, std::size_t dk);

} // namespace serial

void matmul(const cxd* a, const cxd* b, cxd* c,
            std::size_t n, std::size_t k, std::size_t m);
void matvec(const cxd* a, const cxd* x, cxd* y,
            std::size_t n, std::size_t m);
void kron(const cxd* a, const cxd* b, cxd* c,
          std::size_t n, std::size_t m, std::size_t p, std::size_t q);
void partial_trace_second(const cxd* t, cxd* out,
                          std::size_t dh, std::size_t dk);

} // namespace qcorr::kernels
