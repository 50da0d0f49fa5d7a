"""Path-complete barrier function toolkit (python bindings)."""

from pcbf._core import (
    LabeledGraph,
    SafetySpec,
    SimulationMap,
    SwitchedSystem,
    accepts,
    brute_force_unsafe,
    compare,
    data,
    find_simulation,
    is_path_complete,
    random_stable_system,
    run_counterexample,
    run_experiment,
    simulate,
    synth_quadratic,
    synth_sos,
    transport,
    validate,
    verify_separation,
)

__all__ = [
    "LabeledGraph",
    "SafetySpec",
    "SimulationMap",
    "SwitchedSystem",
    "accepts",
    "brute_force_unsafe",
    "compare",
    "data",
    "find_simulation",
    "is_path_complete",
    "random_stable_system",
    "run_counterexample",
    "run_experiment",
    "simulate",
    "synth_quadratic",
    "synth_sos",
    "transport",
    "validate",
    "verify_separation",
]
