#include "qcorr/kernels.hpp"

#include <cstdint>

namespace qcorr::kernels {

namespace serial {

void matmul(const cxd* a, const cxd* b, cxd* c,
            std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            cxd acc{0.0, 0.0};
            for (std::size_t l = 0; l < k; ++l)
                acc += a[i * k + l] * b[l * m + j];
            c[i * m + j] = acc;
        }
    }
}

void matvec(const cxd* a, const cxd* x, cxd* y,
            std::size_t n, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        cxd acc{0.0, 0.0};
        for (std::size_t j = 0; j < m; ++j)
            acc += a[i * m + j] * x[j];
        y[i] = acc;
    }
}

void kron(const cxd* a, const cxd* b, cxd* c,
          std::size_t n, std::size_t m, std::size_t p, std::size_t q) {
    const std::size_t cols = m * q;
    for (std::size_t i = 0; i < n * p; ++i) {
        const std::size_t ia = i / p, ib = i % p;
        for (std::size_t j = 0; j < cols; ++j)
            c[i * cols + j] = a[ia * m + j / q] * b[ib * q + j % q];
    }
}

void partial_trace_second(const cxd* t, cxd* out,
                          std::size_t dh, std::size_t dk) {
    const std::size_t d = dh * dk;
    for (std::size_t i = 0; i < dh; ++i) {
        for (std::size_t j = 0; j < dh; ++j) {
            cxd acc{0.0, 0.0};
            for (std::size_t k = 0; k < dk; ++k)
                acc += t[(i * dk + k) * d + (j * dk + k)];
            out[i * dh + j] = acc;
        }
    }
}

} // namespace serial

void matmul(const cxd* a, const cxd* b, cxd* c,
            std::size_t n, std::size_t k, std::size_t m) {
    const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for if (n * k * m >= parallel_grain) schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            cxd acc{0.0, 0.0};
            for (std::size_t l = 0; l < k; ++l)
                acc += a[i * k + l] * b[l * m + j];
            c[i * m + j] = acc;
        }
    }
}

void matvec(const cxd* a, const cxd* x, cxd* y,
            std::size_t n, std::size_t m) {
    const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for if (n * m >= parallel_grain) schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        cxd acc{0.0, 0.0};
        for (std::size_t j = 0; j < m; ++j)
            acc += a[i * m + j] * x[j];
        y[i] = acc;
    }
}

void kron(const cxd* a, const cxd* b, cxd* c,
          std::size_t n, std::size_t m, std::size_t p, std::size_t q) {
    const std::size_t cols = m * q;
    const std::int64_t rows = static_cast<std::int64_t>(n * p);
#pragma omp parallel for if (n * p * cols >= parallel_grain) schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        const std::size_t ia = i / p, ib = i % p;
        for (std::size_t j = 0; j < cols; ++j)
            c[i * cols + j] = a[ia * m + j / q] * b[ib * q + j % q];
    }
}

void partial_trace_second(const cxd* t, cxd* out,
                          std::size_t dh, std::size_t dk) {
    const std::size_t d = dh * dk;
    const std::int64_t rows = static_cast<std::int64_t>(dh);
#pragma omp parallel for if (dh * dh * dk >= parallel_grain) schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < dh; ++j) {
            cxd acc{0.0, 0.0};
            for (std::size_t k = 0; k < dk; ++k)
                acc += t[(i * dk + k) * d + (j * dk + k)];
            out[i * dh + j] = acc;
        }
    }
}

} // namespace qcorr::kernels
