#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qcorr/tolerances.hpp"

namespace qcorr {

// Alignment of two outcome-value lists (each strictly increasing).
struct ValueMatching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unmatched_xs;
    std::vector<std::size_t> unmatched_ys;
};

// Pair up values across two spectra when they differ by at most tol.
// Throws AmbiguousValueMatch if any value has two candidates inside the
// window (refuses to guess).
ValueMatching match_values(const std::vector<double>& xs,
                           const std::vector<double>& ys,
                           double tol = defaults::value_match_tol);

} // namespace qcorr
