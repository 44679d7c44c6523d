#include "qcorr/json_io.hpp"

#include <cmath>
#include <fstream>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

double number_from_json(const json& j, const char* what) {
    if (!j.is_number())
        throw SchemaError(std::string(what) + ": expected a number");
    return j.get<double>();
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw SchemaError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

} // namespace

json to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVec& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(to_json(z));
    return out;
}

json to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

cxd complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError("complex scalar: expected a two-element array [re, im]");
    return cxd{number_from_json(j[0], "complex scalar"),
               number_from_json(j[1], "complex scalar")};
}

CVec vector_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw SchemaError("vector: expected a nonempty array of complex scalars");
    CVec out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw SchemaError("matrix: expected a nonempty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<cxd> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw SchemaError("matrix: each row must be a nonempty array");
        if (cols == 0) {
            cols = row.size();
            entries.reserve(rows * cols);
        } else if (row.size() != cols) {
            throw SchemaError("matrix: ragged rows");
        }
        for (const auto& e : row) entries.push_back(complex_from_json(e));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json to_json(const CorrelationVerdict& v) {
    return json{{"jointly_distributed", v.jointly_distributed},
                {"perfectly_correlated", v.perfectly_correlated},
                {"equally_distributed", v.equally_distributed},
                {"rms_difference", v.rms_difference},
                {"worst_violation",
                 json{{"x", v.worst_violation.x},
                      {"y", v.worst_violation.y},
                      {"term", to_json(v.worst_violation.term)}}},
                {"kronecker_form", v.kronecker_form}};
}

CorrelationVerdict verdict_from_json(const json& j) {
    CorrelationVerdict v;
    v.jointly_distributed = field(j, "jointly_distributed").get<bool>();
    v.perfectly_correlated = field(j, "perfectly_correlated").get<bool>();
    v.equally_distributed = field(j, "equally_distributed").get<bool>();
    v.rms_difference = field(j, "rms_difference").get<double>();
    const json& w = field(j, "worst_violation");
    v.worst_violation.x = field(w, "x").get<double>();
    v.worst_violation.y = field(w, "y").get<double>();
    v.worst_violation.term = complex_from_json(field(w, "term"));
    v.kronecker_form = field(j, "kronecker_form").get<bool>();
    return v;
}

json to_json(const Theorem2Report& r) {
    return json{{"cond_i", r.cond_i},     {"cond_ii", r.cond_ii}, {"cond_iii", r.cond_iii},
                {"cond_iv", r.cond_iv},   {"cond_v", r.cond_v},   {"tol", r.tol},
                {"seed", r.seed}};
}

Theorem2Report theorem2_from_json(const json& j) {
    Theorem2Report r;
    r.cond_i = field(j, "cond_i").get<bool>();
    r.cond_ii = field(j, "cond_ii").get<bool>();
    r.cond_iii = field(j, "cond_iii").get<bool>();
    r.cond_iv = field(j, "cond_iv").get<bool>();
    r.cond_v = field(j, "cond_v").get<bool>();
    r.tol = field(j, "tol").get<double>();
    r.seed = field(j, "seed").get<std::uint64_t>();
    return r;
}

json to_json(const PreciseMeasurementReport& r) {
    return json{{"cond_i", r.cond_i},
                {"cond_ii", r.cond_ii},
                {"cond_iii", r.cond_iii},
                {"cond_iv", r.cond_iv},
                {"povm_outcomes", r.povm_outcomes},
                {"povm_effect_norms", r.povm_effect_norms}};
}

PreciseMeasurementReport precise_report_from_json(const json& j) {
    PreciseMeasurementReport r;
    r.cond_i = field(j, "cond_i").get<bool>();
    r.cond_ii = field(j, "cond_ii").get<bool>();
    r.cond_iii = field(j, "cond_iii").get<bool>();
    r.cond_iv = field(j, "cond_iv").get<bool>();
    r.povm_outcomes = field(j, "povm_outcomes").get<std::vector<double>>();
    r.povm_effect_norms = field(j, "povm_effect_norms").get<std::vector<double>>();
    return r;
}

json to_json(const SampleReport& r) {
    return json{{"shots", r.shots},
                {"seed", r.seed},
                {"keys", r.keys},
                {"empirical", r.empirical},
                {"theoretical", r.theoretical},
                {"max_abs_deviation", r.max_abs_deviation},
                {"total_variation", r.total_variation},
                {"off_support", r.off_support}};
}

SampleReport sample_report_from_json(const json& j) {
    SampleReport r;
    r.shots = field(j, "shots").get<std::uint64_t>();
    r.seed = field(j, "seed").get<std::uint64_t>();
    r.keys = field(j, "keys").get<std::vector<std::vector<double>>>();
    r.empirical = field(j, "empirical").get<std::vector<double>>();
    r.theoretical = field(j, "theoretical").get<std::vector<double>>();
    r.max_abs_deviation = field(j, "max_abs_deviation").get<double>();
    r.total_variation = field(j, "total_variation").get<double>();
    r.off_support = field(j, "off_support").get<bool>();
    return r;
}

json to_json(const VonNeumannReport& r) {
    return json{{"operator_identity", r.operator_identity},
                {"value_reproducing", r.value_reproducing},
                {"repeatability", r.repeatability},
                {"samples", r.samples},
                {"seed", r.seed}};
}

json to_json(const MomentTable& t) {
    return json{{"x_moments", t.x_moments}, {"y_moments", t.y_moments}};
}

namespace {

PairInstance pair_from_payload(const json& payload) {
    try {
        return PairInstance{Observable::from_matrix(matrix_from_json(field(payload, "X"))),
                            Observable::from_matrix(matrix_from_json(field(payload, "Y"))),
                            StateVector(vector_from_json(field(payload, "psi")))};
    } catch (const NotHermitian& e) {
        throw SchemaError(std::string("pair instance: ") + e.what());
    }
}

ProcessInstance process_from_payload(const json& payload) {
    const auto dim_h = field(payload, "dimH").get<std::size_t>();
    const auto dim_k = field(payload, "dimK").get<std::size_t>();
    try {
        MeasuringProcess process(dim_h, dim_k,
                                 StateVector(vector_from_json(field(payload, "xi"))),
                                 matrix_from_json(field(payload, "U")),
                                 Observable::from_matrix(matrix_from_json(field(payload, "M"))));
        return ProcessInstance{std::move(process),
                               Observable::from_matrix(matrix_from_json(field(payload, "A"))),
                               StateVector(vector_from_json(field(payload, "psi")))};
    } catch (const NotHermitian& e) {
        throw SchemaError(std::string("process instance: ") + e.what());
    }
}

json builtin_fixture(const std::string& name);

} // namespace

InstanceFile parse_instance(const json& j) {
    if (!j.is_object()) throw SchemaError("instance: expected a JSON object");
    const std::string kind = field(j, "kind").get<std::string>();

    InstanceFile out;
    if (j.contains("options")) {
        const json& o = j.at("options");
        if (!o.is_object()) throw SchemaError("options: expected an object");
        if (o.contains("tol")) out.options.tol = o.at("tol").get<double>();
        if (o.contains("value_match_tol"))
            out.options.value_match_tol = o.at("value_match_tol").get<double>();
        if (o.contains("gate")) out.options.gate = o.at("gate").get<double>();
        if (o.contains("seed")) out.options.seed = o.at("seed").get<std::uint64_t>();
        if (o.contains("shots")) out.options.shots = o.at("shots").get<std::uint64_t>();
        if (o.contains("samples")) out.options.samples = o.at("samples").get<int>();
    }

    if (kind == "fixture") {
        const std::string name = field(field(j, "payload"), "name").get<std::string>();
        InstanceFile resolved = parse_instance(builtin_fixture(name));
        resolved.options = out.options;
        return resolved;
    }
    if (kind == "pair") {
        out.kind = kind;
        out.pair = pair_from_payload(field(j, "payload"));
        return out;
    }
    if (kind == "process") {
        out.kind = kind;
        out.process = process_from_payload(field(j, "payload"));
        return out;
    }
    throw SchemaError("instance: unknown kind \"" + kind + "\"");
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return parse_instance(j);
}

namespace {

json builtin_fixture(const std::string& name) {
    const json one = to_json(cxd{1.0, 0.0});
    const json zero = to_json(cxd{0.0, 0.0});
    const double s = 1.0 / std::sqrt(2.0);

    if (name == "bell") {
        // sigma_z (x) I against I (x) sigma_z in (|00> + |11>)/sqrt(2)
        json x = json::array(), y = json::array(), psi = json::array();
        const double xv[4] = {1, 1, -1, -1}, yv[4] = {1, -1, 1, -1};
        for (int i = 0; i < 4; ++i) {
            json xrow = json::array(), yrow = json::array();
            for (int j = 0; j < 4; ++j) {
                xrow.push_back(i == j ? to_json(cxd{xv[i], 0.0}) : zero);
                yrow.push_back(i == j ? to_json(cxd{yv[i], 0.0}) : zero);
            }
            x.push_back(xrow);
            y.push_back(yrow);
        }
        psi = json::array({to_json(cxd{s, 0.0}), zero, zero, to_json(cxd{s, 0.0})});
        return json{{"kind", "pair"}, {"payload", {{"X", x}, {"Y", y}, {"psi", psi}}}};
    }
    if (name == "ozawa_s2") {
        auto row = [&](std::initializer_list<int> vals) {
            json r = json::array();
            for (int v : vals) r.push_back(to_json(cxd{static_cast<double>(v), 0.0}));
            return r;
        };
        json x = json::array({row({1, 1, 0, 0}), row({1, 1, 0, 0}), row({0, 0, 1, 1}), row({0, 0, 1, 0})});
        json y = json::array({row({1, 1, 0, 0}), row({1, 0, 0, 0}), row({0, 0, 1, 1}), row({0, 0, 1, 1})});
        json psi = json::array({one, zero, zero, zero});
        return json{{"kind", "pair"}, {"payload", {{"X", x}, {"Y", y}, {"psi", psi}}}};
    }
    if (name == "product_state") {
        json inner_doc = builtin_fixture("bell");
        const double q = 0.5;
        inner_doc["payload"]["psi"] = json::array({to_json(cxd{q, 0.0}), to_json(cxd{q, 0.0}),
                                                   to_json(cxd{q, 0.0}), to_json(cxd{q, 0.0})});
        return inner_doc;
    }
    if (name == "von_neumann_sz" || name == "identity_U") {
        json sz = json::array({json::array({one, zero}), json::array({zero, to_json(cxd{-1.0, 0.0})})});
        json u = json::array();
        const int perm_cnot[4] = {0, 1, 3, 2};
        for (int i = 0; i < 4; ++i) {
            json r = json::array();
            for (int j = 0; j < 4; ++j) {
                const bool hit = (name == "von_neumann_sz") ? (perm_cnot[i] == j) : (i == j);
                r.push_back(hit ? one : zero);
            }
            u.push_back(r);
        }
        json xi = (name == "von_neumann_sz")
                      ? json::array({one, zero})
                      : json::array({to_json(cxd{s, 0.0}), to_json(cxd{s, 0.0})});
        json psi = (name == "von_neumann_sz")
                       ? json::array({to_json(cxd{s, 0.0}), to_json(cxd{s, 0.0})})
                       : json::array({one, zero});
        return json{{"kind", "process"},
                    {"payload",
                     {{"dimH", 2}, {"dimK", 2}, {"xi", xi}, {"U", u}, {"M", sz}, {"A", sz}, {"psi", psi}}}};
    }
    throw SchemaError("unknown fixture name \"" + name + "\"");
}

} // namespace

} // namespace qcorr
