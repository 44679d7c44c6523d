#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qcorr/correlation.hpp"
#include "qcorr/cyclic.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/models.hpp"
#include "qcorr/simulator.hpp"
#include "qcorr/spectral.hpp"

// Repo-wide JSON encoding: a complex scalar is a two-element array
// [re, im], a vector an array of scalars, a matrix an array of rows.
// See docs/schema.md for the full instance and report schemas.

namespace qcorr {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

json to_json(const cxd& z);
json to_json(const CVec& v);
json to_json(const ComplexMatrix& m);
cxd complex_from_json(const json& j);
CVec vector_from_json(const json& j);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const CorrelationVerdict& v);
CorrelationVerdict verdict_from_json(const json& j);

json to_json(const Theorem2Report& r);
Theorem2Report theorem2_from_json(const json& j);

json to_json(const PreciseMeasurementReport& r);
PreciseMeasurementReport precise_report_from_json(const json& j);

json to_json(const SampleReport& r);
SampleReport sample_report_from_json(const json& j);

json to_json(const VonNeumannReport& r);
json to_json(const MomentTable& t);

// Run configuration carried by an instance file; command-line flags win
// over these, which win over the built-in defaults.
struct InstanceOptions {
    std::optional<double> tol;
    std::optional<double> value_match_tol;
    std::optional<double> gate;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<int> samples;
};

struct PairInstance {
    Observable x;
    Observable y;
    StateVector psi;
};

struct ProcessInstance {
    MeasuringProcess process;
    Observable target;
    StateVector psi;
};

struct InstanceFile {
    std::string kind; // "pair" or "process" after fixture resolution
    std::optional<PairInstance> pair;
    std::optional<ProcessInstance> process;
    InstanceOptions options;
};

// Parse an instance document. kind "fixture" with a payload {"name": ...}
// resolves a built-in: bell, ozawa_s2, product_state (pairs),
// von_neumann_sz, identity_U (processes). Throws SchemaError on malformed
// input.
InstanceFile parse_instance(const json& j);
InstanceFile load_instance(const std::string& path);

} // namespace qcorr
