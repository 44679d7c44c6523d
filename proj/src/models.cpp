#include "qcorr/models.hpp"

#include <cmath>
#include <utility>

#include "qcorr/correlation.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

double moment(const ComplexMatrix& m, const StateVector& psi, int order) {
    CVec v = psi.amplitudes();
    for (int k = 0; k < order; ++k) v = m * v;
    return inner(psi.amplitudes(), v).real();
}

MomentTable moment_table(const ComplexMatrix& x, const ComplexMatrix& y,
                         const StateVector& psi) {
    MomentTable t;
    for (int k = 1; k <= 3; ++k) {
        t.x_moments[k - 1] = moment(x, psi, k);
        t.y_moments[k - 1] = moment(y, psi, k);
    }
    return t;
}

StateVector random_state(std::size_t dim, Rng& rng) {
    CVec v(dim);
    for (auto& e : v) e = rng.gaussian_complex();
    return StateVector::normalized(std::move(v));
}

} // namespace

VonNeumannModel build_von_neumann(const Observable& a,
                                  const std::vector<CVec>& eigenbasis,
                                  std::size_t xi_index) {
    const std::size_t d = a.dim();
    if (eigenbasis.size() != d)
        throw NotEigenbasis("build_von_neumann: basis size must equal dim(A)");
    if (xi_index >= d)
        throw DimensionMismatch("build_von_neumann: xi_index out of range");

    std::vector<double> values(d);
    for (std::size_t n = 0; n < d; ++n) {
        if (eigenbasis[n].size() != d)
            throw NotEigenbasis("build_von_neumann: basis vector dimension mismatch");
        for (std::size_t m = 0; m <= n; ++m) {
            const cxd g = inner(eigenbasis[m], eigenbasis[n]);
            const cxd want = (m == n) ? cxd{1.0, 0.0} : cxd{0.0, 0.0};
            if (std::abs(g - want) > defaults::tol_op)
                throw NotEigenbasis("build_von_neumann: basis is not orthonormal");
        }
        const CVec av = a.matrix * eigenbasis[n];
        values[n] = inner(eigenbasis[n], av).real();
        if (norm(av - cxd{values[n], 0.0} * eigenbasis[n]) > defaults::tol_op)
            throw NotEigenbasis("build_von_neumann: basis does not diagonalize A");
    }

    // pointer basis: eta_0 = xi = e_{xi_index}, then remaining standard
    // vectors in index order
    std::vector<CVec> eta;
    eta.reserve(d);
    auto standard = [d](std::size_t j) {
        CVec v(d, cxd{0.0, 0.0});
        v[j] = cxd{1.0, 0.0};
        return v;
    };
    eta.push_back(standard(xi_index));
    for (std::size_t j = 0; j < d; ++j)
        if (j != xi_index) eta.push_back(standard(j));

    // U = sum_{n,m} |phi_n (x) eta_{(m+n) mod d}><phi_n (x) eta_m|
    ComplexMatrix u(d * d, d * d);
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            const CVec from = kron(eigenbasis[n], eta[m]);
            const CVec to = kron(eigenbasis[n], eta[(m + n) % d]);
            u = u + outer(to, from);
        }
    }

    ComplexMatrix meter_matrix(d, d);
    for (std::size_t n = 0; n < d; ++n)
        meter_matrix = meter_matrix + cxd{values[n], 0.0} * outer(eta[n]);

    VonNeumannModel model{
        a, eigenbasis, values,
        MeasuringProcess(d, d, StateVector(standard(xi_index)), std::move(u),
                         Observable::from_matrix(meter_matrix))};

    // defining relation U(phi_n (x) xi) = phi_n (x) xi_n
    for (std::size_t n = 0; n < d; ++n) {
        const CVec lhs = model.process.unitary *
                         kron(eigenbasis[n], model.process.probe_state.amplitudes());
        if (norm(lhs - kron(eigenbasis[n], eta[n])) > defaults::tol_op)
            throw InternalCheckFailure("build_von_neumann: defining relation violated");
    }
    return model;
}

VonNeumannModel build_von_neumann(const Observable& a, std::size_t xi_index) {
    std::vector<CVec> basis;
    for (std::size_t i = 0; i < a.spectral.size(); ++i) {
        try {
            basis.push_back(rank1_range_vector(a.projection(i)));
        } catch (const NotProjection&) {
            throw NotEigenbasis("build_von_neumann: degenerate spectrum needs an explicit basis");
        }
    }
    return build_von_neumann(a, basis, xi_index);
}

VonNeumannReport verify_von_neumann(const VonNeumannModel& m, std::size_t psi_samples,
                                    std::uint64_t seed, double tol) {
    const MeasuringProcess& p = m.process;
    const std::size_t d = p.dim_h;
    const ComplexMatrix u_dag = p.unitary.adjoint();
    const ComplexMatrix a_full = kron(m.system_observable.matrix, ComplexMatrix::identity(d));
    const ComplexMatrix meter_full = kron(ComplexMatrix::identity(d), p.meter.matrix);
    const ComplexMatrix a_after = u_dag * a_full * p.unitary;
    const ComplexMatrix meter_after = u_dag * meter_full * p.unitary;

    VonNeumannReport report;
    report.samples = psi_samples;
    report.seed = seed;

    // restriction to H (x) [xi]: right-multiply by I (x) |xi><xi|
    const ComplexMatrix restrict =
        kron(ComplexMatrix::identity(d), outer(p.probe_state.amplitudes()));
    report.operator_identity =
        max_abs_diff(a_full * restrict, a_after * restrict) <= tol &&
        max_abs_diff(a_full * restrict, meter_after * restrict) <= tol;

    const Observable a_full_obs = tensor_right_identity(m.system_observable, d);
    const Observable meter_after_obs = heisenberg_meter(p);
    const Observable a_after_obs = Observable::from_matrix(a_after);

    report.value_reproducing = true;
    report.repeatability = true;
    Rng rng(seed);
    for (std::size_t s = 0; s < psi_samples; ++s) {
        const StateVector joint = kron(random_state(d, rng), p.probe_state);
        if (!is_perfectly_correlated(a_full_obs, meter_after_obs, joint, tol).perfectly_correlated)
            report.value_reproducing = false;
        if (!is_perfectly_correlated(a_after_obs, meter_after_obs, joint, tol).perfectly_correlated)
            report.repeatability = false;
        if (!report.value_reproducing && !report.repeatability) break;
    }
    return report;
}

HeisenbergPairFixture ozawa_counterexample() {
    const ComplexMatrix x{{1, 1, 0, 0},
                          {1, 1, 0, 0},
                          {0, 0, 1, 1},
                          {0, 0, 1, 0}};
    const ComplexMatrix y{{1, 1, 0, 0},
                          {1, 0, 0, 0},
                          {0, 0, 1, 1},
                          {0, 0, 1, 1}};
    const ComplexMatrix u{{0, 0, 1, 0},
                          {0, 0, 0, 1},
                          {1, 0, 0, 0},
                          {0, 1, 0, 0}};
    const StateVector psi = StateVector::basis(4, 0);

    if (max_abs_diff(y, u.adjoint() * x * u) > defaults::tol_op)
        throw InternalCheckFailure("ozawa_counterexample: Heisenberg consistency violated");

    HeisenbergPairFixture f{Observable::from_matrix(x), Observable::from_matrix(y),
                            u, psi, moment_table(x, y, psi)};
    return f;
}

ProductStateExample product_state_example(const Observable& b, const StateVector& phi,
                                          double tol) {
    if (b.dim() != phi.dim())
        throw DimensionMismatch("product_state_example: observable and state dimensions differ");
    const std::size_t d = b.dim();

    const Observable x = tensor_right_identity(b, d);
    const Observable y = tensor_left_identity(d, b);
    const StateVector psi = kron(phi, phi);

    ComplexMatrix swap(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            swap(i * d + j, j * d + i) = cxd{1.0, 0.0};

    if (max_abs_diff(y.matrix, swap.adjoint() * x.matrix * swap) > defaults::tol_op)
        throw InternalCheckFailure("product_state_example: swap consistency violated");

    ProductStateExample ex{
        HeisenbergPairFixture{x, y, swap, psi, moment_table(x.matrix, y.matrix, psi)}};

    ex.equally_distributed = is_perfectly_correlated(x, y, psi, tol).equally_distributed;

    const JointTermTable table = joint_term_table(x, y, psi);
    ex.statistically_independent = true;
    for (std::size_t i = 0; i < table.x_values.size(); ++i) {
        const double px = expectation(b.projection(i), phi).real();
        for (std::size_t j = 0; j < table.y_values.size(); ++j) {
            const double py = expectation(b.projection(j), phi).real();
            if (std::abs(table.term(i, j) - cxd{px * py, 0.0}) > tol)
                ex.statistically_independent = false;
        }
    }
    return ex;
}

} // namespace qcorr
