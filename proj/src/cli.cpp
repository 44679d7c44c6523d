#include "qcorr/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

#include "qcorr/correlation.hpp"
#include "qcorr/cyclic.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/json_io.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/models.hpp"
#include "qcorr/simulator.hpp"

namespace qcorr::cli {

namespace {

void merge_file_options(Options& opts, const InstanceOptions& file) {
    if (!opts.tol_set && file.tol) opts.tol = *file.tol;
    if (!opts.value_match_tol_set && file.value_match_tol)
        opts.value_match_tol = *file.value_match_tol;
    if (!opts.seed_set && file.seed) opts.seed = *file.seed;
    if (!opts.shots_set && file.shots) opts.shots = *file.shots;
    if (!opts.samples_set && file.samples) opts.samples = *file.samples;
    if (!opts.gate_set && file.gate) opts.gate = *file.gate;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_verdict(std::ostream& out, const CorrelationVerdict& v) {
    out << "perfectly_correlated: " << yesno(v.perfectly_correlated) << "\n"
        << "jointly_distributed:  " << yesno(v.jointly_distributed) << "\n"
        << "equally_distributed:  " << yesno(v.equally_distributed) << "\n"
        << "rms_difference:       " << v.rms_difference << "\n"
        << "kronecker_form:       " << yesno(v.kronecker_form) << "\n"
        << "worst_violation:      term(x=" << v.worst_violation.x
        << ", y=" << v.worst_violation.y << ") = " << v.worst_violation.term.real()
        << (v.worst_violation.term.imag() < 0 ? " - " : " + ")
        << std::abs(v.worst_violation.term.imag()) << "i\n";
}

void print_theorem2(std::ostream& out, const Theorem2Report& r) {
    out << "theorem2: (i)=" << yesno(r.cond_i) << " (ii)=" << yesno(r.cond_ii)
        << " (iii)=" << yesno(r.cond_iii) << " (iv)=" << yesno(r.cond_iv)
        << " (v)=" << yesno(r.cond_v) << "  [tol=" << r.tol << ", seed=" << r.seed << "]\n";
}

void print_sample_report(std::ostream& out, const SampleReport& r) {
    out << "shots: " << r.shots << "  seed: " << r.seed << "\n";
    for (std::size_t i = 0; i < r.keys.size(); ++i) {
        out << "  (";
        for (std::size_t k = 0; k < r.keys[i].size(); ++k)
            out << (k ? ", " : "") << r.keys[i][k];
        out << "): empirical " << std::setw(10) << r.empirical[i] << "  theoretical "
            << std::setw(10) << r.theoretical[i] << "  ";
        const int bar = static_cast<int>(std::lround(r.empirical[i] * 40.0));
        for (int b = 0; b < bar; ++b) out << '#';
        out << "\n";
    }
    out << "max_abs_deviation: " << r.max_abs_deviation
        << "\ntotal_variation:   " << r.total_variation << "\n";
    if (r.off_support) out << "warning: empirical outcome outside theoretical support\n";
}

} // namespace

int cmd_correlate(const std::string& path, Options opts, std::ostream& out) {
    const InstanceFile inst = load_instance(path);
    if (!inst.pair) throw SchemaError("correlate needs a \"pair\" instance");
    merge_file_options(opts, inst.options);

    const auto& [x, y, psi] = *inst.pair;
    const CorrelationVerdict verdict =
        is_perfectly_correlated(x, y, psi, opts.tol, opts.value_match_tol);
    const Theorem2Report t2 = theorem2_report(x, y, psi, opts.tol, opts.samples, opts.seed);

    if (opts.format == "json") {
        json doc{{"schema_version", schema_version},
                 {"command", "correlate"},
                 {"verdict", to_json(verdict)},
                 {"theorem2", to_json(t2)}};
        out << doc.dump(2) << "\n";
    } else {
        print_verdict(out, verdict);
        print_theorem2(out, t2);
    }
    return verdict.perfectly_correlated ? exit_holds : exit_fails;
}

int cmd_measure_check(const std::string& path, Options opts, std::ostream& out) {
    const InstanceFile inst = load_instance(path);
    if (!inst.process) throw SchemaError("measure-check needs a \"process\" instance");
    merge_file_options(opts, inst.options);

    const ProcessInstance& p = *inst.process;
    const PreciseMeasurementReport report = precise_measurement_report(
        p.process, p.target, p.psi, opts.tol, opts.samples, opts.seed);
    const bool all_states = is_precise_for_all_states(p.process, p.target, opts.tol,
                                                      opts.value_match_tol);

    if (opts.format == "json") {
        json doc{{"schema_version", schema_version},
                 {"command", "measure-check"},
                 {"report", to_json(report)},
                 {"precise_for_all_states", all_states}};
        out << doc.dump(2) << "\n";
    } else {
        out << "precise measurement in psi: (i)=" << yesno(report.cond_i)
            << " (ii)=" << yesno(report.cond_ii) << " (iii)=" << yesno(report.cond_iii)
            << " (iv)=" << yesno(report.cond_iv) << "\n"
            << "precise for all states:     " << yesno(all_states) << "\n"
            << "povm effects (outcome: max-abs norm):";
        for (std::size_t i = 0; i < report.povm_outcomes.size(); ++i)
            out << "  " << report.povm_outcomes[i] << ": " << report.povm_effect_norms[i];
        out << "\n";
    }
    return report.all() ? exit_holds : exit_fails;
}

int cmd_paper_examples(Options opts, std::ostream& out) {
    const double tol = opts.tol;
    bool pass = true;
    auto check = [&pass](bool ok) {
        pass = pass && ok;
        return yesno(ok);
    };

    // 4x4 counterexample pair: equal first and second moments, third
    // moments 4 against 3, zero vector distance, yet not jointly
    // distributed and not perfectly correlated.
    const HeisenbergPairFixture fx = ozawa_counterexample();
    const CorrelationVerdict verdict =
        is_perfectly_correlated(fx.x, fx.y, fx.psi, tol, opts.value_match_tol);
    const std::array<double, 3> want_x{1.0, 2.0, 4.0}, want_y{1.0, 2.0, 3.0};
    bool moments_ok = true;
    for (int k = 0; k < 3; ++k)
        moments_ok = moments_ok && std::abs(fx.moments.x_moments[k] - want_x[k]) <= tol &&
                     std::abs(fx.moments.y_moments[k] - want_y[k]) <= tol;
    const bool ce_ok = moments_ok && verdict.rms_difference <= tol &&
                       !verdict.jointly_distributed && !verdict.perfectly_correlated &&
                       check_theorem1(fx.x, fx.y, fx.psi, tol);

    // product-state pair for sigma_z in (|0> + |1>)/sqrt(2): equally
    // distributed and independent, every joint term 1/4, not correlated
    const Observable sz = Observable::from_matrix(ComplexMatrix{{1, 0}, {0, -1}});
    const StateVector plus = StateVector::normalized({cxd{1, 0}, cxd{1, 0}});
    const ProductStateExample ps = product_state_example(sz, plus, tol);
    const JointTermTable ps_table =
        joint_term_table(ps.fixture.x, ps.fixture.y, ps.fixture.psi);
    bool quarter_terms = true;
    for (const auto& t : ps_table.terms)
        quarter_terms = quarter_terms && std::abs(t - cxd{0.25, 0.0}) <= tol;
    const bool ps_pc = is_perfectly_correlated(ps.fixture.x, ps.fixture.y, ps.fixture.psi,
                                               tol, opts.value_match_tol)
                           .perfectly_correlated;
    const bool ps_ok =
        ps.equally_distributed && ps.statistically_independent && quarter_terms && !ps_pc;

    // von Neumann model for sigma_z: defining relation, operator identity,
    // value reproduction and repeatability, POVM = spectral projections
    const VonNeumannModel vn = build_von_neumann(sz);
    const VonNeumannReport vn_report =
        verify_von_neumann(vn, static_cast<std::size_t>(opts.samples), opts.seed, tol);
    const bool vn_precise = is_precise_for_all_states(vn.process, sz, tol, opts.value_match_tol);
    const bool vn_ok = vn_report.all() && vn_precise;

    if (opts.format == "json") {
        json doc{{"schema_version", schema_version},
                 {"command", "paper-examples"},
                 {"counterexample",
                  {{"moment_table", to_json(fx.moments)}, {"verdict", to_json(verdict)}}},
                 {"product_state",
                  {{"equally_distributed", ps.equally_distributed},
                   {"statistically_independent", ps.statistically_independent},
                   {"perfectly_correlated", ps_pc}}},
                 {"von_neumann",
                  {{"report", to_json(vn_report)}, {"precise_for_all_states", vn_precise}}},
                 {"pass", ce_ok && ps_ok && vn_ok}};
        pass = ce_ok && ps_ok && vn_ok;
        out << doc.dump(2) << "\n";
    } else {
        out << "[counterexample pair]\n";
        out << "  moments of X in psi: " << fx.moments.x_moments[0] << " "
            << fx.moments.x_moments[1] << " " << fx.moments.x_moments[2] << "\n";
        out << "  moments of Y in psi: " << fx.moments.y_moments[0] << " "
            << fx.moments.y_moments[1] << " " << fx.moments.y_moments[2] << "\n";
        out << "  rms_difference: " << verdict.rms_difference << "\n";
        out << "  jointly_distributed: " << yesno(verdict.jointly_distributed)
            << "  perfectly_correlated: " << yesno(verdict.perfectly_correlated) << "\n";
        out << "  checks: " << check(ce_ok) << "\n";
        out << "[product-state pair]\n";
        out << "  equally_distributed: " << yesno(ps.equally_distributed)
            << "  statistically_independent: " << yesno(ps.statistically_independent)
            << "  perfectly_correlated: " << yesno(ps_pc) << "\n";
        out << "  checks: " << check(ps_ok) << "\n";
        out << "[von Neumann model]\n";
        out << "  operator_identity: " << yesno(vn_report.operator_identity)
            << "  value_reproducing: " << yesno(vn_report.value_reproducing)
            << "  repeatability: " << yesno(vn_report.repeatability)
            << "  precise_for_all_states: " << yesno(vn_precise) << "\n";
        out << "  checks: " << check(vn_ok) << "\n";
        out << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    pass = ce_ok && ps_ok && vn_ok;
    return pass ? exit_holds : exit_fails;
}

int cmd_simulate(const std::string& path, Options opts, std::ostream& out) {
    const InstanceFile inst = load_instance(path);
    merge_file_options(opts, inst.options);

    SampleReport report;
    if (inst.pair) {
        const auto& [x, y, psi] = *inst.pair;
        report = simulate_consecutive(x, y, psi, opts.shots, opts.seed);
    } else if (inst.process) {
        report = simulate_indirect(inst.process->process, inst.process->psi, opts.shots,
                                   opts.seed);
    } else {
        throw SchemaError("simulate needs a \"pair\" or \"process\" instance");
    }

    if (opts.format == "json") {
        json doc{{"schema_version", schema_version},
                 {"command", "simulate"},
                 {"report", to_json(report)},
                 {"gate", opts.gate}};
        out << doc.dump(2) << "\n";
    } else {
        print_sample_report(out, report);
        out << "gate: " << opts.gate << "\n";
    }
    return report.max_abs_deviation <= opts.gate ? exit_holds : exit_fails;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"perfect-correlation verdicts for finite-dimensional observables"};
    app.require_subcommand(1);

    Options opts;
    std::string instance_path;

    auto add_common = [&](CLI::App* cmd, bool wants_instance) {
        if (wants_instance)
            cmd->add_option("instance", instance_path, "instance JSON file")->required();
        cmd->add_option("--tol", opts.tol, "verdict tolerance");
        cmd->add_option("--value-match-tol", opts.value_match_tol,
                        "outcome-value matching window");
        cmd->add_option("--seed", opts.seed, "random seed");
        cmd->add_option("--samples", opts.samples, "sphere sample count");
        cmd->add_option("--format", opts.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* correlate = app.add_subcommand("correlate", "pair verdict and the five conditions");
    add_common(correlate, true);
    CLI::App* measure = app.add_subcommand("measure-check", "precise-measurement report");
    add_common(measure, true);
    CLI::App* paper = app.add_subcommand("paper-examples", "run the shipped fixtures");
    add_common(paper, false);
    CLI::App* simulate = app.add_subcommand("simulate", "sampled measurement statistics");
    add_common(simulate, true);
    simulate->add_option("--shots", opts.shots, "number of shots");
    simulate->add_option("--gate", opts.gate, "max-abs-deviation gate for exit code 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_holds;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    CLI::App* active = app.get_subcommands().front();
    opts.tol_set = active->count("--tol") > 0;
    opts.value_match_tol_set = active->count("--value-match-tol") > 0;
    opts.seed_set = active->count("--seed") > 0;
    opts.samples_set = active->count("--samples") > 0;
    opts.shots_set = active == simulate && simulate->count("--shots") > 0;
    opts.gate_set = active == simulate && simulate->count("--gate") > 0;

    try {
        if (active == correlate) return cmd_correlate(instance_path, opts, out);
        if (active == measure) return cmd_measure_check(instance_path, opts, out);
        if (active == paper) return cmd_paper_examples(opts, out);
        return cmd_simulate(instance_path, opts, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace qcorr::cli
