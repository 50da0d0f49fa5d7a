#pragma once

#include <json.hpp>

#include <filesystem>
#include <variant>

#include "pcbf/brute_force.hpp"
#include "pcbf/necessity.hpp"
#include "pcbf/separation.hpp"
#include "pcbf/synthesis.hpp"

namespace pcbf::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct LoadNotes {
    std::vector<std::string> warnings;
};

/// "0.015625" / "1/3" coefficient strings; integers pass through,
/// non-integral JSON floats are rejected to keep inputs exact.
Rat rational_from_json(const json& j);
json rational_to_json(const Rat& r);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json region_to_json(const Region& r);
Region region_from_json(const json& j);

json spec_to_json(const SafetySpec& spec);
/// Enforces X0/Xu disjointness. An overlapping semialgebraic Xu is
/// repaired by flipping one inequality when that resolves the overlap;
/// the flip is reported in the notes, never silent.
SafetySpec spec_from_json(const json& j, LoadNotes* notes = nullptr);

json system_to_json(const SwitchedSystem& sys);
SwitchedSystem system_from_json(const json& j);

json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const json& j);

json trajectory_to_json(const Trajectory& t);
json witness_to_json(const UnsafeWitness& w);

using Certificate = std::variant<QuadraticCertificate, SosCertificate>;

json certificate_to_json(const QuadraticCertificate& cert, const LabeledGraph& g);
json certificate_to_json(const SosCertificate& cert, const LabeledGraph& g);
Certificate certificate_from_json(const json& j, const LabeledGraph& g);

json validation_report_to_json(const ValidationReport& report);
std::string validation_report_to_text(const ValidationReport& report);

json admissibility_report_to_json(const AdmissibilityReport& report, const LabeledGraph& g);
std::string admissibility_report_to_text(const AdmissibilityReport& report, const LabeledGraph& g);

json separation_report_to_json(const SeparationReport& report, const LabeledGraph& g);
json separation_instance_to_json(const SeparationInstance& inst);

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pcbf::io
