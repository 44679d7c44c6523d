#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/spectral.hpp"
#include "support/generators.hpp"

using namespace qcorr;
namespace tg = qcorr::testgen;

namespace {

// Kernel basis of a small square matrix by Gaussian elimination with
// partial pivoting; independent of the eigensolver-based implementation
// paths it is used to check.
std::vector<CVec> null_space(ComplexMatrix m, double pivot_tol = 1e-8) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
        if (std::abs(m(best, col)) <= pivot_tol) continue;
        for (std::size_t c = 0; c < n; ++c) std::swap(m(row, c), m(best, c));
        const cxd pivot = m(row, col);
        for (std::size_t c = 0; c < n; ++c) m(row, c) /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row) continue;
            const cxd factor = m(r, col);
            for (std::size_t c = 0; c < n; ++c) m(r, c) -= factor * m(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<CVec> kernel;
    for (std::size_t col = 0; col < n; ++col) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end()) continue;
        CVec v(n, cxd{0.0, 0.0});
        v[col] = cxd{1.0, 0.0};
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m(r, col);
        const double nv = norm(v);
        for (auto& e : v) e /= nv;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

const ComplexMatrix a_t1{{1, 1, 0, 0},
                         {1, 1, 0, 0},
                         {0, 0, 1, 1},
                         {0, 0, 1, 0}};

} // namespace

TEST_CASE("spectral_decompose: identity and diagonal cases") {
    const SpectralDecomposition id2 = spectral_decompose(ComplexMatrix::identity(2));
    REQUIRE(id2.size() == 1);
    CHECK(id2.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_abs_diff(id2.projections[0], ComplexMatrix::identity(2)) < 1e-14);

    const SpectralDecomposition sz = spectral_decompose(ComplexMatrix{{1, 0}, {0, -1}});
    REQUIRE(sz.size() == 2);
    CHECK(sz.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sz.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_abs_diff(sz.projections[0], ComplexMatrix{{0, 0}, {0, 1}}) < 1e-14);
    CHECK(max_abs_diff(sz.projections[1], ComplexMatrix{{1, 0}, {0, 0}}) < 1e-14);
}

TEST_CASE("spectral_decompose: the 4x4 block pair has the hand-solved spectrum") {
    // block [[1,1],[1,1]] gives {0, 2}; block [[1,1],[1,0]] gives the two
    // roots of x^2 - x - 1
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    const double golden_conj = (1.0 - std::sqrt(5.0)) / 2.0;

    const SpectralDecomposition s = spectral_decompose(a_t1);
    REQUIRE(s.size() == 4);
    CHECK(s.values[0] == doctest::Approx(golden_conj).epsilon(1e-12));
    CHECK(s.values[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.values[2] == doctest::Approx(golden).epsilon(1e-12));
    CHECK(s.values[3] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectral_decompose rejects non-Hermitian input") {
    CHECK_THROWS_AS(spectral_decompose(ComplexMatrix{{0, 1}, {0, 0}}), NotHermitian);
    CHECK_THROWS_AS(spectral_decompose(ComplexMatrix{{cxd{0, 1}, 0}, {0, 0}}), NotHermitian);
}

TEST_CASE("spectral invariants on random Hermitian matrices") {
    Rng rng(101);
    for (int trial = 0; trial < 110; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 7);
        const ComplexMatrix m = tg::random_hermitian(dim, rng);
        const SpectralDecomposition s = spectral_decompose(m);

        CHECK(max_abs_diff(s.resolution_sum(), ComplexMatrix::identity(dim)) < defaults::tol_op);
        CHECK(max_abs_diff(s.reconstruct(), m) < defaults::tol_op);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i + 1 < s.size()) CHECK(s.values[i] < s.values[i + 1]);
            for (std::size_t j = 0; j < s.size(); ++j) {
                const ComplexMatrix prod = s.projections[i] * s.projections[j];
                if (i == j)
                    CHECK(max_abs_diff(prod, s.projections[i]) < defaults::tol_op);
                else
                    CHECK(max_abs(prod) < defaults::tol_op);
            }
        }
    }
}

TEST_CASE("clustering merges near-degenerate eigenvalues and is deterministic") {
    ComplexMatrix m(3, 3);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0 + 1e-12;
    m(2, 2) = 5.0;

    const SpectralDecomposition merged = spectral_decompose(m);
    REQUIRE(merged.size() == 2);
    CHECK(merged.values[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(merged.projections[0].trace().real() == doctest::Approx(2.0).epsilon(1e-12));

    const SpectralDecomposition split = spectral_decompose(m, 1e-14);
    CHECK(split.size() == 3);

    // bit-identical rerun
    const SpectralDecomposition again = spectral_decompose(m);
    REQUIRE(again.size() == merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        CHECK(again.values[i] == merged.values[i]);
        CHECK(again.projections[i] == merged.projections[i]);
    }
}

TEST_CASE("tensor products") {
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix sz{{1, 0}, {0, -1}};
    ComplexMatrix want(4, 4);
    want(0, 0) = 1;
    want(1, 1) = 1;
    want(2, 2) = -1;
    want(3, 3) = -1;
    CHECK(max_abs_diff(kron(sz, ComplexMatrix::identity(2)), want) == 0.0);

    // mixed-product identity (a (x) b)(u (x) v) = (a u) (x) (b v)
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = tg::random_matrix(2, rng);
        const ComplexMatrix b = tg::random_matrix(2, rng);
        CVec u(2), v(2);
        for (auto& e : u) e = rng.gaussian_complex();
        for (auto& e : v) e = rng.gaussian_complex();
        const CVec lhs = kron(a, b) * kron(u, v);
        const CVec rhs = kron(a * u, b * v);
        CHECK(norm(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("partial trace over the second factor") {
    Rng rng(44);
    const ComplexMatrix a = tg::random_matrix(2, rng);
    const ComplexMatrix b = tg::random_matrix(2, rng);
    CHECK(max_abs_diff(partial_trace_second(kron(a, b), 2, 2), b.trace() * a) < 1e-12);

    const ComplexMatrix t = tg::random_matrix(6, rng);
    CHECK(std::abs(partial_trace_second(t, 2, 3).trace() - t.trace()) < 1e-12);

    CHECK(max_abs_diff(partial_trace_second(ComplexMatrix::identity(4), 2, 2),
                       cxd{2.0, 0.0} * ComplexMatrix::identity(2)) == 0.0);

    CHECK_THROWS_AS(partial_trace_second(ComplexMatrix::identity(4), 2, 3), DimensionMismatch);
}

TEST_CASE("subspace intersection: trivial cases") {
    ComplexMatrix p(2, 2), q(2, 2);
    p(0, 0) = 1;
    q(1, 1) = 1;
    CHECK(max_abs_diff(subspace_intersection_projection(p, p), p) < 1e-12);
    CHECK(max_abs(subspace_intersection_projection(p, q)) < 1e-12);

    CHECK_THROWS_AS(subspace_intersection_projection(ComplexMatrix{{2, 0}, {0, 0}}, p),
                    NotProjection);
}

TEST_CASE("subspace intersection of random rank-2 projections in dim 3") {
    Rng rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        const auto bp = tg::random_orthonormal_basis(3, rng);
        const auto bq = tg::random_orthonormal_basis(3, rng);
        const ComplexMatrix p = outer(bp[0]) + outer(bp[1]);
        const ComplexMatrix q = outer(bq[0]) + outer(bq[1]);

        const ComplexMatrix result = subspace_intersection_projection(p, q);

        // oracle: kernel of 2I - p - q holds exactly the common range
        const ComplexMatrix gap =
            cxd{2.0, 0.0} * ComplexMatrix::identity(3) - p - q;
        const auto kernel = null_space(gap);
        REQUIRE(kernel.size() == 1);
        const CVec& k = kernel.front();

        CHECK(norm(p * k - k) < 1e-7);
        CHECK(norm(q * k - k) < 1e-7);
        CHECK(std::abs(result.trace().real() - 1.0) < 1e-7);
        CHECK(max_abs_diff(result, outer(k)) < 1e-6);
        CHECK(norm(result * k - k) < 1e-6);
    }
}

TEST_CASE("state vectors enforce unit norm") {
    CHECK_THROWS_AS(StateVector({cxd{1, 0}, cxd{1, 0}}), Error);
    const StateVector s = StateVector::normalized({cxd{1, 0}, cxd{1, 0}});
    CHECK(std::abs(norm(s.amplitudes()) - 1.0) < 1e-15);
    CHECK(StateVector::basis(3, 2)[2] == cxd{1.0, 0.0});
    CHECK_THROWS_AS(StateVector::basis(2, 2), DimensionMismatch);
}

TEST_CASE("Observable::from_parts validates reconstruction") {
    const Observable good = Observable::from_matrix(ComplexMatrix{{1, 0}, {0, -1}});
    CHECK_NOTHROW(Observable::from_parts(good.matrix, good.spectral));
    SpectralDecomposition bad = good.spectral;
    bad.values[0] = 7.0;
    CHECK_THROWS_AS(Observable::from_parts(good.matrix, bad), InternalCheckFailure);
}
