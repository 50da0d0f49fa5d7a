#include "pcbf/experiment.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "pcbf/rng.hpp"

namespace pcbf {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string double_field(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ExperimentTally run_experiment(const ExperimentConfig& config) {
    if (config.count < 1) throw std::invalid_argument("run_experiment: count must be positive");
    if (auto pc = is_path_complete(config.g); !pc.complete)
        throw NonPathCompleteError("G", pc.rejected);
    if (auto pc = is_path_complete(config.gbar); !pc.complete)
        throw NonPathCompleteError("Gbar", pc.rejected);

    std::optional<SimulationMap> transport_map = find_simulation(config.g, config.gbar);

    ExperimentTally tally;
    tally.records.resize(config.count);

    auto run_instance = [&](int index) {
        InstanceRecord record;
        record.index = index;
        record.seed = sub_seed(config.seed, static_cast<std::uint64_t>(index));
        SwitchedSystem sys = config.system_override
                                 ? *config.system_override
                                 : random_stable_system(config.dimension, Alphabet(config.alphabet),
                                                        record.seed);

        std::optional<QuadraticCertificate> g_cert;
        auto t0 = std::chrono::steady_clock::now();
        try {
            g_cert = synth_quadratic_pcbf(sys, config.g, config.spec, config.synth);
        } catch (const SolverFailureError&) {
            g_cert.reset();
        }
        record.g_ms = elapsed_ms(t0);
        record.g_feasible = g_cert.has_value();

        std::optional<QuadraticCertificate> gbar_cert;
        auto t1 = std::chrono::steady_clock::now();
        try {
            gbar_cert = synth_quadratic_pcbf(sys, config.gbar, config.spec, config.synth);
        } catch (const SolverFailureError&) {
            gbar_cert.reset();
        }
        record.gbar_ms = elapsed_ms(t1);
        record.gbar_feasible = gbar_cert.has_value();

        if (record.g_feasible && !record.gbar_feasible && transport_map) {
            QuadraticCertificate moved =
                transport_certificate(*g_cert, config.g, config.gbar, *transport_map);
            if (validate_certificate(moved, sys, config.gbar, config.spec, config.synth).pass) {
                record.gbar_feasible = true;
                record.gbar_via_transport = true;
            }
        }
        tally.records[index] = record;
    };

    int threads = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, config.count));
    if (threads == 1) {
        for (int i = 0; i < config.count; ++i) run_instance(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < config.count; i = next.fetch_add(1))
                    run_instance(i);
            });
        for (auto& t : pool) t.join();
    }

    for (const InstanceRecord& r : tally.records) {
        if (r.g_feasible && r.gbar_feasible)
            ++tally.both;
        else if (r.g_feasible)
            ++tally.only_g;
        else if (r.gbar_feasible)
            ++tally.only_gbar;
        else
            ++tally.neither;
    }
    return tally;
}

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string emit_report(const ExperimentTally& tally, ReportFormat format) {
    switch (format) {
        case ReportFormat::Text: {
            std::ostringstream out;
            out << "systems:   " << tally.total() << "\n";
            out << "neither:   " << tally.neither << "\n";
            out << "both:      " << tally.both << "\n";
            out << "only_gbar: " << tally.only_gbar << "\n";
            out << "only_g:    " << tally.only_g << "\n";
            return out.str();
        }
        case ReportFormat::Json: {
            nlohmann::json records = nlohmann::json::array();
            for (const auto& r : tally.records)
                records.push_back(nlohmann::json{{"index", r.index},
                                                 {"seed", std::to_string(r.seed)},
                                                 {"g_feasible", r.g_feasible},
                                                 {"gbar_feasible", r.gbar_feasible},
                                                 {"gbar_via_transport", r.gbar_via_transport},
                                                 {"g_ms", double_field(r.g_ms)},
                                                 {"gbar_ms", double_field(r.gbar_ms)}});
            nlohmann::json j{{"schema_version", 1},
                             {"neither", tally.neither},
                             {"both", tally.both},
                             {"only_gbar", tally.only_gbar},
                             {"only_g", tally.only_g},
                             {"records", records}};
            return j.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::ostringstream out;
            out << "index,seed,g_feasible,gbar_feasible,gbar_via_transport,g_ms,gbar_ms\n";
            for (const auto& r : tally.records)
                out << r.index << "," << r.seed << "," << (r.g_feasible ? 1 : 0) << ","
                    << (r.gbar_feasible ? 1 : 0) << "," << (r.gbar_via_transport ? 1 : 0) << ","
                    << double_field(r.g_ms) << "," << double_field(r.gbar_ms) << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unreachable report format");
}

ExperimentTally tally_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExperimentTally tally;
    tally.neither = j.at("neither").get<int>();
    tally.both = j.at("both").get<int>();
    tally.only_gbar = j.at("only_gbar").get<int>();
    tally.only_g = j.at("only_g").get<int>();
    for (const auto& r : j.at("records")) {
        InstanceRecord record;
        record.index = r.at("index").get<int>();
        record.seed = std::stoull(r.at("seed").get<std::string>());
        record.g_feasible = r.at("g_feasible").get<bool>();
        record.gbar_feasible = r.at("gbar_feasible").get<bool>();
        record.gbar_via_transport = r.at("gbar_via_transport").get<bool>();
        record.g_ms = std::strtod(r.at("g_ms").get<std::string>().c_str(), nullptr);
        record.gbar_ms = std::strtod(r.at("gbar_ms").get<std::string>().c_str(), nullptr);
        tally.records.push_back(record);
    }
    return tally;
}

}  // namespace pcbf
