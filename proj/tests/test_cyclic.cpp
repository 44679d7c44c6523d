#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcorr/correlation.hpp"
#include "qcorr/cyclic.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/models.hpp"
#include "support/generators.hpp"

using namespace qcorr;
namespace tg = qcorr::testgen;

TEST_CASE("cyclic subspace of an eigenstate is one-dimensional") {
    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const CyclicSubspace c = cyclic_subspace(sz, StateVector::basis(2, 0));
    REQUIRE(c.dim() == 1);
    CHECK(std::abs(std::abs(c.basis[0][0]) - 1.0) < 1e-14);
    CHECK(c.basis_values[0] == doctest::Approx(1.0).epsilon(1e-14));
    ComplexMatrix want(2, 2);
    want(0, 0) = 1;
    CHECK(max_abs_diff(c.projection, want) < 1e-14);
}

TEST_CASE("cyclic subspace of sigma_x from |0>: Gram-Schmidt oracle") {
    const Observable sx = Observable::from_matrix(tg::pauli_x());
    const StateVector psi = StateVector::basis(2, 0);
    const CyclicSubspace c = cyclic_subspace(sx, psi);
    REQUIRE(c.dim() == 2);

    // oracle: orthonormalize {psi, X psi} directly
    CVec b0 = psi.amplitudes();
    CVec b1 = sx.matrix * psi;
    b1 = b1 - inner(b0, b1) * b0;
    const double n1 = norm(b1);
    REQUIRE(n1 > 0.5);
    b1 = cxd{1.0 / n1, 0.0} * b1;
    const ComplexMatrix oracle = outer(b0) + outer(b1);
    CHECK(max_abs_diff(c.projection, oracle) < 1e-12);
}

TEST_CASE("cyclic subspace is everything when psi meets every eigenspace") {
    ComplexMatrix d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    const StateVector psi = StateVector::normalized({cxd{1, 0}, cxd{1, 0}, cxd{1, 0}});
    const CyclicSubspace c = cyclic_subspace(Observable::from_matrix(d), psi);
    CHECK(c.dim() == 3);
    CHECK(max_abs_diff(c.projection, ComplexMatrix::identity(3)) < 1e-12);
}

TEST_CASE("cyclic subspace invariants") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 5);
        const Observable x = Observable::from_matrix(tg::random_hermitian(dim, rng));
        const StateVector psi = tg::random_state(dim, rng);
        const CyclicSubspace c = cyclic_subspace(x, psi);

        // P psi = psi, X P = P X, and every basis vector is an eigenvector
        CHECK(norm(c.projection * psi - psi.amplitudes()) < defaults::tol_op);
        CHECK(max_abs_diff(x.matrix * c.projection, c.projection * x.matrix) < defaults::tol_op);
        for (std::size_t n = 0; n < c.dim(); ++n) {
            CHECK(std::abs(norm(c.basis[n]) - 1.0) < 1e-12);
            CHECK(norm(x.matrix * c.basis[n] - cxd{c.basis_values[n], 0.0} * c.basis[n]) <
                  defaults::tol_op);
        }
        for (std::size_t i = 0; i < x.spectral.size(); ++i)
            CHECK(max_abs_diff(x.projection(i) * c.projection, c.projection * x.projection(i)) <
                  defaults::tol_op);

        // sampled sphere states stay inside: unit norm, P phi = phi
        Rng sampler(99);
        for (int s = 0; s < 5; ++s) {
            const StateVector phi = sample_unit_vector(c, sampler);
            CHECK(std::abs(norm(phi.amplitudes()) - 1.0) < 1e-12);
            CHECK(norm(c.projection * phi - phi.amplitudes()) < 1e-10);
        }
    }
}

TEST_CASE("theorem 2 report on the fixtures") {
    const auto bell = tg::bell_case();
    const Theorem2Report rb = theorem2_report(bell.x, bell.y, bell.psi);
    CHECK(rb.all());
    CHECK(rb.consistent());

    const HeisenbergPairFixture fx = ozawa_counterexample();
    const Theorem2Report rf = theorem2_report(fx.x, fx.y, fx.psi);
    CHECK_FALSE(rf.cond_i);
    CHECK_FALSE(rf.cond_ii);
    CHECK_FALSE(rf.cond_iii);
    CHECK_FALSE(rf.cond_iv);
    CHECK_FALSE(rf.cond_v);

    Rng rng(31);
    const Observable x = Observable::from_matrix(tg::random_hermitian(4, rng));
    const Theorem2Report rs = theorem2_report(x, x, tg::random_state(4, rng));
    CHECK(rs.all());
}

TEST_CASE("common eigenstate decomposition of the entangled fixture") {
    const auto bell = tg::bell_case();
    const auto d = common_eigenstate_decomposition(bell.x, bell.y, bell.psi);
    REQUIRE(d.has_value());
    REQUIRE(d->values.size() == 2);
    CHECK(d->values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(d->values[1] == doctest::Approx(1.0).epsilon(1e-12));
    // each component carries half the weight: |11> and |00> directions
    CHECK(norm(d->components[0]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(norm(d->components[1]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(std::abs(inner(d->components[0], d->components[1])) < 1e-12);

    CVec sum(4, cxd{0.0, 0.0});
    for (std::size_t i = 0; i < 4; ++i) sum[i] = d->components[0][i] + d->components[1][i];
    CHECK(norm(sum - bell.psi.amplitudes()) < 1e-12);
}

TEST_CASE("common eigenstate decomposition: trivial and failing cases") {
    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const auto d = common_eigenstate_decomposition(sz, sz, StateVector::basis(2, 0));
    REQUIRE(d.has_value());
    // only the +1 component carries weight
    bool found = false;
    for (std::size_t i = 0; i < d->values.size(); ++i) {
        if (norm(d->components[i]) > 0.5) {
            CHECK(d->values[i] == doctest::Approx(1.0).epsilon(1e-12));
            found = true;
        }
    }
    CHECK(found);

    const HeisenbergPairFixture fx = ozawa_counterexample();
    CHECK_FALSE(common_eigenstate_decomposition(fx.x, fx.y, fx.psi).has_value());
}

TEST_CASE("equal distribution certificate on the fixtures") {
    Rng rng(41);
    const Observable x = Observable::from_matrix(tg::random_hermitian(3, rng));
    CHECK(equal_distribution_certificate(x, x, tg::random_state(3, rng)));

    const auto bell = tg::bell_case();
    CHECK(equal_distribution_certificate(bell.x, bell.y, bell.psi));

    // product state with a non-eigenstate factor
    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const StateVector plus = StateVector::normalized({cxd{1, 0}, cxd{1, 0}});
    const ProductStateExample ex = product_state_example(sz, plus);
    CHECK_FALSE(equal_distribution_certificate(ex.fixture.x, ex.fixture.y, ex.fixture.psi));
}

TEST_CASE("theorems 2, 3 and 4 agree across the battery") {
    const auto battery = tg::pair_battery(128, 4100);
    for (const auto& c : battery) {
        CAPTURE(c.kind);
        const Theorem2Report r = theorem2_report(c.x, c.y, c.psi);
        CHECK(r.consistent());
        const bool decomposable =
            common_eigenstate_decomposition(c.x, c.y, c.psi).has_value();
        CHECK(decomposable == r.cond_i);
        CHECK(equal_distribution_certificate(c.x, c.y, c.psi) == r.cond_i);
        if (c.expect_correlated) CHECK(r.cond_i == *c.expect_correlated);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const StateVector psi3 = StateVector::basis(3, 0);
    CHECK_THROWS_AS(cyclic_subspace(sz, psi3), DimensionMismatch);
    CHECK_THROWS_AS(theorem2_report(sz, sz, psi3), DimensionMismatch);
    CHECK_THROWS_AS(common_eigenstate_decomposition(sz, sz, psi3), DimensionMismatch);
    CHECK_THROWS_AS(equal_distribution_certificate(sz, sz, psi3), DimensionMismatch);
}
