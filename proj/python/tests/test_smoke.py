"""Smoke tests for the python bindings."""

import json

import pcbf


def test_path_completeness_of_bundled_graphs():
    complete, _ = pcbf.is_path_complete(pcbf.data.graph_a())
    assert complete

    complete, rejected = pcbf.is_path_complete(pcbf.data.graph_b())
    assert not complete
    assert rejected == [1, 2, 1]

    assert pcbf.accepts(pcbf.data.graph_a(), [1, 2, 1])
    assert not pcbf.accepts(pcbf.data.graph_b(), [1, 2, 1])


def test_graph_json_round_trip():
    g = pcbf.data.platoon_graph()
    back = pcbf.LabeledGraph.from_json(g.to_json())
    assert back == g
    parsed = json.loads(g.to_json())
    assert parsed["schema_version"] == 1
    assert parsed["alphabet"] == 2


def test_simulation_map_of_bundled_pair():
    m = pcbf.find_simulation(pcbf.data.platoon_graph(), pcbf.data.platoon_graph_bar())
    assert m is not None
    assert m.image == [0, 1, 0]
    assert pcbf.compare(pcbf.data.platoon_graph(), pcbf.data.platoon_graph_bar()) == "less_or_equal"


def test_exact_simulation():
    result = pcbf.run_counterexample(pcbf.data.graph_b())
    assert result["word"] == [1, 2, 1]
    assert result["admissible"]
    assert result["coefficients"]["v1"] == ["64", "16", "16", "4"]

    sys = pcbf.SwitchedSystem.from_json(result["system"])
    states = pcbf.simulate(sys, ["1/8", "0", "0", "0"], [1, 2, 1])
    assert states[-1] == ["0", "0", "0", "1"]


def test_separation_gaps():
    ok, gaps = pcbf.verify_separation(pcbf.data.platoon_graph())
    assert ok
    assert set(gaps) == {"1/6"}


def test_quadratic_synthesis_and_validation():
    sys = pcbf.SwitchedSystem.from_json(
        json.dumps(
            {
                "schema_version": 1,
                "dimension": 2,
                "alphabet": 1,
                "modes": {"1": {"type": "linear", "A": [["0.5", "0"], ["0", "0.5"]]}},
            }
        )
    )
    graph = pcbf.LabeledGraph.from_json(
        json.dumps(
            {
                "schema_version": 1,
                "alphabet": 1,
                "nodes": ["v1"],
                "edges": [["v1", 1, "v1"]],
            }
        )
    )
    spec = pcbf.SafetySpec.from_json(
        json.dumps(
            {
                "schema_version": 1,
                "X": {"type": "full"},
                "X0": {"type": "ball", "r2": "4"},
                "Xu": {"type": "ball_complement", "r2": "9"},
            }
        )
    )
    cert = pcbf.synth_quadratic(sys, graph, spec)
    assert cert is not None
    ok, _report = pcbf.validate(cert, sys, graph, spec)
    assert ok

    witness = pcbf.brute_force_unsafe(sys, spec, 4)
    assert witness is None
