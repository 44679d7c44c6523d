#include "qcorr/value_match.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

ValueMatching match_values(const std::vector<double>& xs,
                           const std::vector<double>& ys,
                           double tol) {
    ValueMatching out;
    std::vector<int> hit_y(ys.size(), -1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::size_t candidates = 0;
        std::size_t best = 0;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (std::abs(xs[i] - ys[j]) <= tol) {
                ++candidates;
                best = j;
            }
        }
        if (candidates > 1)
            throw AmbiguousValueMatch("value " + std::to_string(xs[i]) +
                                      " matches more than one candidate within tolerance");
        if (candidates == 1) {
            if (hit_y[best] >= 0)
                throw AmbiguousValueMatch("value " + std::to_string(ys[best]) +
                                          " matches more than one candidate within tolerance");
            hit_y[best] = static_cast<int>(i);
            out.pairs.emplace_back(i, best);
        } else {
            out.unmatched_xs.push_back(i);
        }
    }
    for (std::size_t j = 0; j < ys.size(); ++j)
        if (hit_y[j] < 0) out.unmatched_ys.push_back(j);
    return out;
}

} // namespace qcorr
