#include <doctest.h>

#include "pcbf/canonical.hpp"
#include "pcbf/experiment.hpp"
#include "test_util.hpp"

using namespace pcbf;

TEST_SUITE_BEGIN("experiment");

TEST_CASE("fixed contractive system is feasible for both graphs") {
    ExperimentConfig config(data::platoon_graph(), data::platoon_graph_bar(),
                            data::experiment_spec());
    config.count = 1;
    config.dimension = 3;
    config.system_override =
        SwitchedSystem(3, Alphabet(2),
                       {LinearMode{RatMat::identity(3) * rat_frac(1, 2)},
                        LinearMode{RatMat::identity(3) * rat_frac(1, 3)}});
    ExperimentTally tally = run_experiment(config);
    CHECK(tally.both == 1);
    CHECK(tally.only_g == 0);
    CHECK(tally.only_gbar == 0);
    CHECK(tally.neither == 0);
}

TEST_CASE("identical graphs never split the tally") {
    ExperimentConfig config(data::graph_a(), data::graph_a(), data::experiment_spec());
    config.count = 12;
    config.seed = 11;
    ExperimentTally tally = run_experiment(config);
    CHECK(tally.only_g == 0);
    CHECK(tally.only_gbar == 0);
    CHECK(tally.total() == 12);
}

TEST_CASE("simulated pairs keep only_g at zero and tallies deterministic") {
    ExperimentConfig config(data::platoon_graph(), data::platoon_graph_bar(),
                            data::experiment_spec());
    config.count = 24;
    config.seed = 20257;
    ExperimentTally tally = run_experiment(config);
    CHECK(tally.only_g == 0);
    CHECK(tally.total() == config.count);

    ExperimentTally again = run_experiment(config);
    CHECK(again.neither == tally.neither);
    CHECK(again.both == tally.both);
    CHECK(again.only_gbar == tally.only_gbar);
    CHECK(again.only_g == tally.only_g);
    for (int i = 0; i < config.count; ++i) {
        CHECK(again.records[i].g_feasible == tally.records[i].g_feasible);
        CHECK(again.records[i].gbar_feasible == tally.records[i].gbar_feasible);
        CHECK(again.records[i].seed == tally.records[i].seed);
    }
}

TEST_CASE("non-path-complete inputs are rejected") {
    ExperimentConfig config(data::graph_b(), data::graph_a(), data::experiment_spec());
    config.count = 1;
    CHECK_THROWS_AS(run_experiment(config), NonPathCompleteError);
}

TEST_CASE("reports in all three formats") {
    ExperimentTally tally;
    tally.neither = 10;
    tally.both = 5;
    tally.only_gbar = 2;
    tally.only_g = 0;
    tally.records.push_back({0, 42, true, true, false, 1.5, 2.5});
    tally.records.push_back({1, 43, false, true, false, 0.5, 0.75});

    std::string text = emit_report(tally, ReportFormat::Text);
    CHECK(text.find("neither:   10") != std::string::npos);
    CHECK(text.find("only_g:    0") != std::string::npos);
    CHECK(text.find("17") != std::string::npos);

    std::string csv = emit_report(tally, ReportFormat::Csv);
    CHECK(csv.find("index,seed,") == 0);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 3);  // header + one row per record

    std::string json_text = emit_report(tally, ReportFormat::Json);
    ExperimentTally back = tally_from_json_text(json_text);
    CHECK(back == tally);
    CHECK_THROWS(report_format_from_string("yaml"));
}

TEST_SUITE_END();
