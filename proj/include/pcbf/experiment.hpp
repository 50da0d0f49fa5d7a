#pragma once

#include <cstdint>
#include <optional>

#include "pcbf/graph.hpp"
#include "pcbf/synthesis.hpp"

namespace pcbf {

struct ExperimentConfig {
    ExperimentConfig(LabeledGraph g_, LabeledGraph gbar_, SafetySpec spec_)
        : g(std::move(g_)), gbar(std::move(gbar_)), spec(std::move(spec_)) {}

    int count = 300;
    int dimension = 3;
    int alphabet = 2;
    std::uint64_t seed = 0;
    LabeledGraph g;
    LabeledGraph gbar;
    SafetySpec spec;
    SynthOptions synth;
    int threads = 0;  // 0 = hardware concurrency
    /// Testing hook: bypass the random draw with a fixed system.
    std::optional<SwitchedSystem> system_override;
};

struct InstanceRecord {
    int index = 0;
    std::uint64_t seed = 0;
    bool g_feasible = false;
    bool gbar_feasible = false;
    /// The gbar certificate came from transporting g's along the
    /// recorded simulation map after direct synthesis failed.
    bool gbar_via_transport = false;
    double g_ms = 0.0;
    double gbar_ms = 0.0;

    bool operator==(const InstanceRecord&) const = default;
};

struct ExperimentTally {
    int neither = 0;
    int both = 0;
    int only_gbar = 0;
    int only_g = 0;
    std::vector<InstanceRecord> records;

    int total() const { return neither + both + only_gbar + only_g; }
    bool operator==(const ExperimentTally&) const = default;
};

/// Per-instance: draw one random stable system, synthesize against g
/// and gbar, tally the 2x2 outcome. When g simulates gbar and direct
/// synthesis on gbar fails while g succeeded, the g certificate is
/// transported and validated before gbar is declared infeasible.
/// Deterministic per (seed, count); instances run in parallel.
ExperimentTally run_experiment(const ExperimentConfig& config);

enum class ReportFormat { Text, Json, Csv };

ReportFormat report_format_from_string(const std::string& name);

std::string emit_report(const ExperimentTally& tally, ReportFormat format);

ExperimentTally tally_from_json_text(const std::string& text);

}  // namespace pcbf
