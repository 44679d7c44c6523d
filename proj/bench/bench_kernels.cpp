// Times the OpenMP kernels against the serial reference across sizes and
// checks that the two paths produce bit-identical results while doing so.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcorr/kernels.hpp"
#include "qcorr/rng.hpp"

using qcorr::kernels::cxd;
using clock_type = std::chrono::high_resolution_clock;

namespace {

std::vector<cxd> random_buffer(std::size_t count, qcorr::Rng& rng) {
    std::vector<cxd> buf(count);
    for (auto& e : buf) e = rng.gaussian_complex();
    return buf;
}

template <typename F>
double time_ms(F&& f, int reps) {
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool identical(const std::vector<cxd>& a, const std::vector<cxd>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-22s %8s %12s %12s %8s\n", "kernel", "n", "serial ms", "parallel ms",
                "speedup");

    qcorr::Rng rng(7);
    bool all_identical = true;

    for (std::size_t n : {32u, 64u, 128u, 256u, 384u}) {
        const auto a = random_buffer(n * n, rng);
        const auto b = random_buffer(n * n, rng);
        std::vector<cxd> c_ser(n * n), c_par(n * n);
        const int reps = n <= 64 ? 50 : 5;

        const double ts = time_ms(
            [&] { qcorr::kernels::serial::matmul(a.data(), b.data(), c_ser.data(), n, n, n); },
            reps);
        const double tp = time_ms(
            [&] { qcorr::kernels::matmul(a.data(), b.data(), c_par.data(), n, n, n); }, reps);
        all_identical = all_identical && identical(c_ser, c_par);
        std::printf("%-22s %8zu %12.3f %12.3f %7.2fx\n", "matmul", n, ts, tp, ts / tp);
    }

    for (std::size_t n : {8u, 16u, 24u}) {
        const auto a = random_buffer(n * n, rng);
        const auto b = random_buffer(n * n, rng);
        std::vector<cxd> c_ser(n * n * n * n), c_par(n * n * n * n);
        const int reps = 20;

        const double ts = time_ms(
            [&] { qcorr::kernels::serial::kron(a.data(), b.data(), c_ser.data(), n, n, n, n); },
            reps);
        const double tp = time_ms(
            [&] { qcorr::kernels::kron(a.data(), b.data(), c_par.data(), n, n, n, n); }, reps);
        all_identical = all_identical && identical(c_ser, c_par);
        std::printf("%-22s %8zu %12.3f %12.3f %7.2fx\n", "kron", n, ts, tp, ts / tp);
    }

    for (std::size_t dh : {16u, 32u, 64u}) {
        const std::size_t dk = dh;
        const auto t = random_buffer(dh * dk * dh * dk, rng);
        std::vector<cxd> o_ser(dh * dh), o_par(dh * dh);
        const int reps = 20;

        const double ts = time_ms(
            [&] { qcorr::kernels::serial::partial_trace_second(t.data(), o_ser.data(), dh, dk); },
            reps);
        const double tp = time_ms(
            [&] { qcorr::kernels::partial_trace_second(t.data(), o_par.data(), dh, dk); }, reps);
        all_identical = all_identical && identical(o_ser, o_par);
        std::printf("%-22s %8zu %12.3f %12.3f %7.2fx\n", "partial_trace_second", dh, ts, tp,
                    ts / tp);
    }

    std::printf("parallel results bit-identical to serial: %s\n", all_identical ? "yes" : "NO");
    return all_identical ? EXIT_SUCCESS : EXIT_FAILURE;
}
