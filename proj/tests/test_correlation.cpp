#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcorr/correlation.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/models.hpp"
#include "support/generators.hpp"

using namespace qcorr;
namespace tg = qcorr::testgen;

namespace {

// The 4x4 pair built from hand-derived block eigenvectors: an oracle for
// the joint-term table that never touches the eigensolver. Block
// [[1,1],[1,1]] has eigenvectors (1,±1)/sqrt(2) at {2, 0}; block
// [[1,1],[1,0]] has (r,1)-direction eigenvectors at each root r of
// x^2 - x - 1.
struct BlockPairOracle {
    std::vector<double> x_values, y_values;
    std::vector<ComplexMatrix> x_proj, y_proj;

    BlockPairOracle() {
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        const double conj = (1.0 - std::sqrt(5.0)) / 2.0;
        auto embed = [](const CVec& v2, std::size_t offset) {
            CVec v(4, cxd{0.0, 0.0});
            v[offset] = v2[0];
            v[offset + 1] = v2[1];
            return v;
        };
        auto dir = [](double r) {
            const double n = std::sqrt(1.0 + r * r);
            return CVec{cxd{r / n, 0.0}, cxd{1.0 / n, 0.0}};
        };
        const double s = 1.0 / std::sqrt(2.0);
        const CVec plus{cxd{s, 0}, cxd{s, 0}}, minus{cxd{s, 0}, cxd{-s, 0}};

        // X = A(t1): equal-sum block on coordinates 0,1, golden block on 2,3
        x_values = {conj, 0.0, golden, 2.0};
        x_proj = {outer(embed(dir(conj), 2)), outer(embed(minus, 0)),
                  outer(embed(dir(golden), 2)), outer(embed(plus, 0))};
        // Y = A(t2): blocks swapped
        y_values = {conj, 0.0, golden, 2.0};
        y_proj = {outer(embed(dir(conj), 0)), outer(embed(minus, 2)),
                  outer(embed(dir(golden), 0)), outer(embed(plus, 2))};
    }

    cxd term(std::size_t i, std::size_t j, const StateVector& psi) const {
        return inner(x_proj[i] * psi, y_proj[j] * psi);
    }
};

} // namespace

TEST_CASE("joint term table: identical diagonal observables") {
    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const JointTermTable t = joint_term_table(sz, sz, StateVector::basis(2, 0));
    REQUIRE(t.x_values.size() == 2);
    // values ascending: index 1 is eigenvalue +1
    CHECK(std::abs(t.term(1, 1) - cxd{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(t.term(0, 0)) < 1e-14);
    CHECK(std::abs(t.term(0, 1)) < 1e-14);
    CHECK(std::abs(t.term(1, 0)) < 1e-14);
}

TEST_CASE("joint term table: the 4x4 pair against the block oracle") {
    const HeisenbergPairFixture fx = ozawa_counterexample();
    const JointTermTable t = joint_term_table(fx.x, fx.y, fx.psi);
    const BlockPairOracle oracle;

    REQUIRE(t.x_values.size() == 4);
    REQUIRE(t.y_values.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(t.x_values[i] == doctest::Approx(oracle.x_values[i]).epsilon(1e-12));
        CHECK(t.y_values[i] == doctest::Approx(oracle.y_values[i]).epsilon(1e-12));
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(t.term(i, j) - oracle.term(i, j, fx.psi)) < 1e-12);
    }

    // frozen closed forms: term(2, golden) = (5+3*sqrt(5))/20 and
    // term(2, (1-sqrt(5))/2) = (5-3*sqrt(5))/20 < 0
    const double root5 = std::sqrt(5.0);
    CHECK(t.term(3, 2).real() == doctest::Approx((5.0 + 3.0 * root5) / 20.0).epsilon(1e-12));
    CHECK(t.term(3, 0).real() == doctest::Approx((5.0 - 3.0 * root5) / 20.0).epsilon(1e-12));
    CHECK(t.term(3, 0).real() < -0.08);

    bool has_violation = false;
    for (const auto& term : t.terms)
        has_violation = has_violation || term.real() < -1e-9 || std::abs(term.imag()) > 1e-9;
    CHECK(has_violation);
    CHECK_FALSE(is_jointly_distributed(t));
}

TEST_CASE("joint term table: commuting diagonal observables give indicator sums") {
    Rng rng(7);
    const StateVector psi = tg::random_state(4, rng);
    ComplexMatrix x(4, 4), y(4, 4);
    const double xv[4] = {1, 1, 2, 3}, yv[4] = {5, 4, 4, 6};
    for (int i = 0; i < 4; ++i) {
        x(i, i) = xv[i];
        y(i, i) = yv[i];
    }
    const JointTermTable t =
        joint_term_table(Observable::from_matrix(x), Observable::from_matrix(y), psi);
    CHECK(is_jointly_distributed(t));
    for (std::size_t i = 0; i < t.x_values.size(); ++i) {
        for (std::size_t j = 0; j < t.y_values.size(); ++j) {
            double want = 0.0;
            for (int k = 0; k < 4; ++k)
                if (xv[k] == t.x_values[i] && yv[k] == t.y_values[j])
                    want += std::norm(psi[k]);
            CHECK(std::abs(t.term(i, j) - cxd{want, 0.0}) < 1e-12);
        }
    }
}

TEST_CASE("jointly distributed: trivial and arbitrary self-pairs") {
    Rng rng(8);
    for (std::size_t dim : {2u, 4u, 5u}) {
        const Observable x = Observable::from_matrix(tg::random_hermitian(dim, rng));
        const StateVector psi = tg::random_state(dim, rng);
        CHECK(is_jointly_distributed(joint_term_table(x, x, psi)));
    }
}

TEST_CASE("perfect correlation: identical observables in any state") {
    Rng rng(9);
    for (std::size_t dim : {2u, 3u, 6u}) {
        const Observable x = Observable::from_matrix(tg::random_hermitian(dim, rng));
        const StateVector psi = tg::random_state(dim, rng);
        const CorrelationVerdict v = is_perfectly_correlated(x, x, psi);
        CHECK(v.perfectly_correlated);
        CHECK(v.jointly_distributed);
        CHECK(v.equally_distributed);
        CHECK(v.kronecker_form);
        CHECK(v.rms_difference < 1e-12);
    }
}

TEST_CASE("perfect correlation: entangled pair, verified by a hand-built table") {
    const auto bell = tg::bell_case();
    const CorrelationVerdict v = is_perfectly_correlated(bell.x, bell.y, bell.psi);
    CHECK(v.perfectly_correlated);
    CHECK(v.jointly_distributed);
    CHECK(v.equally_distributed);
    CHECK(v.rms_difference < 1e-14);

    // brute-force cross terms from hand-built diagonal projections
    ComplexMatrix ex(4, 4), ey(4, 4); // E^X(+1), E^Y(+1)
    ex(0, 0) = ex(1, 1) = 1;
    ey(0, 0) = ey(2, 2) = 1;
    const ComplexMatrix id = ComplexMatrix::identity(4);
    const CVec psi = bell.psi.amplitudes();
    CHECK(std::abs(sandwich(psi, ex * (id - ey), psi)) < 1e-14);
    CHECK(std::abs(sandwich(psi, (id - ex) * ey, psi)) < 1e-14);
    CHECK(std::abs(sandwich(psi, ex * ey, psi) - cxd{0.5, 0.0}) < 1e-14);
}

TEST_CASE("perfect correlation fails for independent product-state copies") {
    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const StateVector plus = StateVector::normalized({cxd{1, 0}, cxd{1, 0}});
    const ProductStateExample ex = product_state_example(sz, plus);
    const CorrelationVerdict v =
        is_perfectly_correlated(ex.fixture.x, ex.fixture.y, ex.fixture.psi);
    CHECK_FALSE(v.perfectly_correlated);
    CHECK(v.jointly_distributed);      // commuting pair
    CHECK(v.equally_distributed);      // same marginal on both factors
    CHECK(v.rms_difference > 0.5);     // psi is not an eigenstate of B
    CHECK(std::abs(v.worst_violation.term.real() - 0.25) < 1e-12);
}

TEST_CASE("rms difference") {
    Rng rng(10);
    const Observable x = Observable::from_matrix(tg::random_hermitian(3, rng));
    const StateVector psi = tg::random_state(3, rng);
    CHECK(rms_difference(x, x, psi) < 1e-13);

    const HeisenbergPairFixture fx = ozawa_counterexample();
    CHECK(rms_difference(fx.x, fx.y, fx.psi) <= 1e-12);

    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const Observable msz = Observable::from_matrix(cxd{-1.0, 0.0} * tg::pauli_z());
    CHECK(rms_difference(sz, msz, StateVector::basis(2, 0)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("theorem 1 biconditional on the paper fixtures") {
    const auto bell = tg::bell_case();
    CHECK(check_theorem1(bell.x, bell.y, bell.psi));

    // rms is zero yet the pair is not jointly distributed: both sides false
    const HeisenbergPairFixture fx = ozawa_counterexample();
    const CorrelationVerdict v = is_perfectly_correlated(fx.x, fx.y, fx.psi);
    CHECK(v.rms_difference <= 1e-12);
    CHECK_FALSE(v.jointly_distributed);
    CHECK_FALSE(v.perfectly_correlated);
    CHECK(check_theorem1(fx.x, fx.y, fx.psi));

    // commuting pair with psi an eigenvector of X - Y at zero
    Rng rng(11);
    const auto basis = tg::random_orthonormal_basis(3, rng);
    const ComplexMatrix x = cxd{1.0, 0.0} * outer(basis[0]) + cxd{2.0, 0.0} * outer(basis[1]) +
                            cxd{3.0, 0.0} * outer(basis[2]);
    const ComplexMatrix y = cxd{1.0, 0.0} * outer(basis[0]) + cxd{2.0, 0.0} * outer(basis[1]) +
                            cxd{5.0, 0.0} * outer(basis[2]);
    CVec in_shared(3, cxd{0.0, 0.0});
    for (std::size_t i = 0; i < 3; ++i)
        in_shared[i] = 0.6 * basis[0][i] + 0.8 * basis[1][i];
    const StateVector psi = StateVector::normalized(in_shared);
    const Observable ox = Observable::from_matrix(x), oy = Observable::from_matrix(y);
    CHECK(is_perfectly_correlated(ox, oy, psi).perfectly_correlated);
    CHECK(check_theorem1(ox, oy, psi));
}

TEST_CASE("theorem 1 and verdict implications across the battery") {
    const auto battery = tg::pair_battery(128, 400);
    for (const auto& c : battery) {
        CAPTURE(c.kind);
        const CorrelationVerdict v = is_perfectly_correlated(c.x, c.y, c.psi);
        if (c.expect_correlated) CHECK(v.perfectly_correlated == *c.expect_correlated);
        if (v.perfectly_correlated) {
            CHECK(v.jointly_distributed);
            CHECK(v.equally_distributed);
            CHECK(v.rms_difference <= defaults::tol_verdict);
        }
        CHECK(v.kronecker_form == v.perfectly_correlated);
        CHECK(check_theorem1(c.x, c.y, c.psi));

        // symmetry of roles
        CHECK(is_perfectly_correlated(c.y, c.x, c.psi).perfectly_correlated ==
              v.perfectly_correlated);
    }
}

TEST_CASE("marginalization and normalization of the table") {
    const auto battery = tg::pair_battery(24, 900);
    for (const auto& c : battery) {
        const JointTermTable t = joint_term_table(c.x, c.y, c.psi);
        cxd total{0.0, 0.0};
        for (std::size_t i = 0; i < t.x_values.size(); ++i) {
            const cxd row = t.x_marginal(i);
            const cxd want = expectation(c.x.projection(i), c.psi);
            CHECK(std::abs(row - want) < defaults::tol_op);
            total += row;
        }
        CHECK(std::abs(total - cxd{1.0, 0.0}) < defaults::tol_op);
        for (std::size_t j = 0; j < t.y_values.size(); ++j)
            CHECK(std::abs(t.y_marginal(j) - expectation(c.y.projection(j), c.psi)) <
                  defaults::tol_op);
    }
}

TEST_CASE("equal distribution is necessary for perfect correlation") {
    const auto battery = tg::pair_battery(64, 1300);
    for (const auto& c : battery) {
        const CorrelationVerdict v = is_perfectly_correlated(c.x, c.y, c.psi);
        if (v.perfectly_correlated) CHECK(v.equally_distributed);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const Observable sz = Observable::from_matrix(tg::pauli_z());
    const Observable id3 = Observable::from_matrix(ComplexMatrix::identity(3));
    const StateVector psi = StateVector::basis(2, 0);
    CHECK_THROWS_AS(joint_term_table(sz, id3, psi), DimensionMismatch);
    CHECK_THROWS_AS(rms_difference(sz, id3, psi), DimensionMismatch);
    CHECK_THROWS_AS(is_perfectly_correlated(id3, id3, psi), DimensionMismatch);
}
