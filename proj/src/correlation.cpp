#include "qcorr/correlation.hpp"

#include <cmath>
#include <cstdint>

#include "qcorr/errors.hpp"
#include "qcorr/value_match.hpp"

namespace qcorr {

cxd JointTermTable::x_marginal(std::size_t i) const {
    cxd acc{0.0, 0.0};
    for (std::size_t j = 0; j < y_values.size(); ++j) acc += term(i, j);
    return acc;
}

cxd JointTermTable::y_marginal(std::size_t j) const {
    cxd acc{0.0, 0.0};
    for (std::size_t i = 0; i < x_values.size(); ++i) acc += term(i, j);
    return acc;
}

JointTermTable joint_term_table(const Observable& x, const Observable& y,
                                const StateVector& psi) {
    if (x.dim() != psi.dim() || y.dim() != psi.dim())
        throw DimensionMismatch("joint_term_table: observables and state must share one dimension");

    // <psi|E^X(x)E^Y(y)|psi> = <E^X(x) psi | E^Y(y) psi> since the
    // projections are Hermitian; precompute the projected vectors once.
    const std::size_t nx = x.spectral.size(), ny = y.spectral.size();
    std::vector<CVec> xproj(nx), yproj(ny);
    for (std::size_t i = 0; i < nx; ++i) xproj[i] = x.projection(i) * psi;
    for (std::size_t j = 0; j < ny; ++j) yproj[j] = y.projection(j) * psi;

    JointTermTable table;
    table.x_values = x.spectral.values;
    table.y_values = y.spectral.values;
    table.terms.resize(nx * ny);
    const auto total = static_cast<std::int64_t>(nx * ny);
    // each slot is independent; fills are bit-stable under any thread count
#pragma omp parallel for if (total * static_cast<std::int64_t>(psi.dim()) >= 1 << 16) schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
        const std::size_t i = static_cast<std::size_t>(k) / ny;
        const std::size_t j = static_cast<std::size_t>(k) % ny;
        table.terms[k] = inner(xproj[i], yproj[j]);
    }
    return table;
}

bool is_jointly_distributed(const JointTermTable& table, double tol) {
    for (const auto& t : table.terms)
        if (t.real() < -tol || std::abs(t.imag()) > tol) return false;
    // <psi|E^X E^Y|psi> and <psi|E^Y E^X|psi> are conjugates, so joint
    // distributivity forces them equal within 2*tol.
    for (const auto& t : table.terms)
        if (std::abs(t - std::conj(t)) > 2.0 * tol)
            throw InternalCheckFailure("is_jointly_distributed: conjugate-symmetry check failed");
    return true;
}

CorrelationVerdict is_perfectly_correlated(const Observable& x, const Observable& y,
                                           const StateVector& psi,
                                           double tol, double value_match_tol) {
    const JointTermTable table = joint_term_table(x, y, psi);
    const std::size_t nx = table.x_values.size(), ny = table.y_values.size();

    CorrelationVerdict v;
    v.jointly_distributed = is_jointly_distributed(table, tol);
    v.rms_difference = rms_difference(x, y, psi);

    v.perfectly_correlated = true;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (std::abs(table.x_values[i] - table.y_values[j]) <= value_match_tol) continue;
            const cxd t = table.term(i, j);
            if (std::abs(t) > std::abs(v.worst_violation.term)) {
                v.worst_violation = {table.x_values[i], table.y_values[j], t};
            }
            if (std::abs(t) > tol) v.perfectly_correlated = false;
        }
    }

    const auto matching = match_values(table.x_values, table.y_values, value_match_tol);

    std::vector<double> px(nx), py(ny);
    for (std::size_t i = 0; i < nx; ++i) px[i] = expectation(x.projection(i), psi).real();
    for (std::size_t j = 0; j < ny; ++j) py[j] = expectation(y.projection(j), psi).real();

    v.equally_distributed = true;
    for (const auto& [i, j] : matching.pairs)
        if (std::abs(px[i] - py[j]) > tol) v.equally_distributed = false;
    for (std::size_t i : matching.unmatched_xs)
        if (std::abs(px[i]) > tol) v.equally_distributed = false;
    for (std::size_t j : matching.unmatched_ys)
        if (std::abs(py[j]) > tol) v.equally_distributed = false;

    // Kronecker form: term(x,y) = delta_{x,y} <psi|E^X(x)|psi>.
    v.kronecker_form = true;
    std::vector<int> match_of_x(nx, -1);
    for (const auto& [i, j] : matching.pairs) match_of_x[i] = static_cast<int>(j);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const cxd expect = (match_of_x[i] == static_cast<int>(j)) ? cxd{px[i], 0.0} : cxd{0.0, 0.0};
            if (std::abs(table.term(i, j) - expect) > tol) v.kronecker_form = false;
        }
        // a value of X with no partner in spec(Y) must carry no probability
        if (match_of_x[i] < 0 && std::abs(px[i]) > tol) v.kronecker_form = false;
    }

    return v;
}

double rms_difference(const Observable& x, const Observable& y, const StateVector& psi) {
    if (x.dim() != psi.dim() || y.dim() != psi.dim())
        throw DimensionMismatch("rms_difference: observables and state must share one dimension");

    const CVec diff = x.matrix * psi - y.matrix * psi;
    const double rms = norm(diff);

    const JointTermTable table = joint_term_table(x, y, psi);
    double expansion = 0.0;
    double range = 1.0;
    for (std::size_t i = 0; i < table.x_values.size(); ++i) {
        for (std::size_t j = 0; j < table.y_values.size(); ++j) {
            const double d = table.x_values[i] - table.y_values[j];
            expansion += d * d * table.term(i, j).real();
            range = std::max(range, d * d);
        }
    }
    if (std::abs(rms * rms - expansion) > defaults::tol_op * range)
        throw InternalCheckFailure("rms_difference: spectral expansion disagrees with the direct norm");
    return rms;
}

bool check_theorem1(const Observable& x, const Observable& y, const StateVector& psi,
                    double tol) {
    const CorrelationVerdict v = is_perfectly_correlated(x, y, psi, tol);
    const bool rhs = v.jointly_distributed && v.rms_difference <= tol;
    return v.perfectly_correlated == rhs;
}

} // namespace qcorr
