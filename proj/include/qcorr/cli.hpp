#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "qcorr/tolerances.hpp"

namespace qcorr::cli {

// Exit-code contract: 0 = property holds, 1 = property fails,
// 2 = usage or input error.
inline constexpr int exit_holds = 0;
inline constexpr int exit_fails = 1;
inline constexpr int exit_usage = 2;

struct Options {
    double tol = defaults::tol_verdict;
    double value_match_tol = defaults::value_match_tol;
    std::uint64_t seed = 2026;
    std::uint64_t shots = 100000;
    int samples = defaults::sphere_samples;
    double gate = 0.02;
    std::string format = "text"; // "text" or "json"

    // set when the corresponding flag was given explicitly (wins over
    // instance-file options)
    bool tol_set = false;
    bool value_match_tol_set = false;
    bool seed_set = false;
    bool shots_set = false;
    bool samples_set = false;
    bool gate_set = false;
};

int cmd_correlate(const std::string& path, Options opts, std::ostream& out);
int cmd_measure_check(const std::string& path, Options opts, std::ostream& out);
int cmd_paper_examples(Options opts, std::ostream& out);
int cmd_simulate(const std::string& path, Options opts, std::ostream& out);

// Parse argv and dispatch; maps input errors to exit code 2 with a
// diagnostic on err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qcorr::cli
