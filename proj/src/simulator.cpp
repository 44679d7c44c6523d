#include "qcorr/simulator.hpp"

#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

// Outcome probabilities below this are numerical dust from projections that
// annihilate the state exactly in theory; they are excluded from the CDF so
// impossible outcomes are never drawn (and off-diagonal counts of perfectly
// correlated pairs are exactly zero, not merely overwhelmingly unlikely).
constexpr double prob_floor = 1e-15;

std::vector<double> clamped(const std::vector<double>& probs) {
    std::vector<double> out(probs.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        out[i] = probs[i] > prob_floor ? probs[i] : 0.0;
        sum += out[i];
    }
    for (auto& p : out) p /= sum;
    return out;
}

std::size_t draw(const std::vector<double>& cdf_probs, double u) {
    double cum = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < cdf_probs.size(); ++i) {
        if (cdf_probs[i] <= 0.0) continue;
        cum += cdf_probs[i];
        last_nonzero = i;
        if (u < cum) return i;
    }
    return last_nonzero;
}

void finish(SampleReport& r, const std::vector<std::uint64_t>& counts,
            const std::vector<double>& theoretical) {
    r.empirical.resize(counts.size());
    r.theoretical = theoretical;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        r.empirical[i] = static_cast<double>(counts[i]) / static_cast<double>(r.shots);
        const double dev = std::abs(r.empirical[i] - theoretical[i]);
        r.max_abs_deviation = std::max(r.max_abs_deviation, dev);
        r.total_variation += 0.5 * dev;
        if (counts[i] > 0 && theoretical[i] <= 0.0) r.off_support = true;
    }
}

} // namespace

SampleReport simulate_consecutive(const Observable& x, const Observable& y,
                                  const StateVector& psi,
                                  std::uint64_t shots, std::uint64_t seed) {
    if (x.dim() != psi.dim() || y.dim() != psi.dim())
        throw DimensionMismatch("simulate_consecutive: dimensions differ");
    if (shots == 0) throw ZeroShots("simulate_consecutive: shots must be >= 1");

    const std::size_t nx = x.spectral.size(), ny = y.spectral.size();

    std::vector<double> px(nx);
    std::vector<std::vector<double>> cond(nx); // p(y | collapsed on x)
    std::vector<double> theoretical(nx * ny, 0.0);
    for (std::size_t i = 0; i < nx; ++i) {
        const CVec xv = x.projection(i) * psi;
        const double n = norm(xv);
        px[i] = n * n;
        cond[i].assign(ny, 0.0);
        for (std::size_t j = 0; j < ny; ++j) {
            const double t = norm(y.projection(j) * xv);
            theoretical[i * ny + j] = t * t; // ||E^Y(y)E^X(x) psi||^2
        }
        if (px[i] > prob_floor) {
            const CVec collapsed = cxd{1.0 / n, 0.0} * xv;
            for (std::size_t j = 0; j < ny; ++j) {
                const double t = norm(y.projection(j) * collapsed);
                cond[i][j] = t * t;
            }
            cond[i] = clamped(cond[i]);
        }
    }
    const std::vector<double> first = clamped(px);

    SampleReport r;
    r.shots = shots;
    r.seed = seed;
    r.keys.reserve(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            r.keys.push_back({x.spectral.values[i], y.spectral.values[j]});

    std::vector<std::uint64_t> counts(nx * ny, 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const std::size_t i = draw(first, rng.uniform());
        const std::size_t j = draw(cond[i], rng.uniform());
        ++counts[i * ny + j];
    }

    finish(r, counts, theoretical);
    return r;
}

SampleReport simulate_indirect(const MeasuringProcess& p, const StateVector& psi,
                               std::uint64_t shots, std::uint64_t seed) {
    if (psi.dim() != p.dim_h)
        throw DimensionMismatch("simulate_indirect: state must live on H");
    if (shots == 0) throw ZeroShots("simulate_indirect: shots must be >= 1");

    const OutcomeDistribution dist = output_distribution(p, psi);
    const std::vector<double> probs = clamped(dist.probabilities);

    SampleReport r;
    r.shots = shots;
    r.seed = seed;
    for (double v : dist.outcomes) r.keys.push_back({v});

    std::vector<std::uint64_t> counts(dist.outcomes.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s)
        ++counts[draw(probs, rng.uniform())];

    finish(r, counts, dist.probabilities);
    return r;
}

} // namespace qcorr
