#pragma once

#include "pcbf/graph.hpp"
#include "pcbf/system.hpp"

namespace pcbf::data {

/// Two-node path-complete graph over {1,2} whose active node tracks
/// the last letter read: (v1,1,v1), (v1,2,v2), (v2,2,v2), (v2,1,v1).
LabeledGraph graph_a();

/// Two-node graph rejecting (121) as its shortest unaccepted word:
/// (v1,1,v1), (v1,2,v2), (v2,2,v2), (v2,2,v1). The counterexample
/// pipeline on this graph reproduces the bundled regression values.
LabeledGraph graph_b();

/// Three-node path-complete unrolling of graph_a (v1 split in two);
/// graph_a simulates it via v1, v2, v1.
LabeledGraph graph_abar();

/// Two-node path-complete graph used with the platoon case study:
/// (v1,1,v1), (v1,1,v2), (v1,2,v2), (v2,2,v1). No 1-labeled edge
/// leaves v2.
LabeledGraph platoon_graph();

/// platoon_graph minus (v2,2,v1); not path-complete.
LabeledGraph platoon_graph_nonpc();

/// Three-node path-complete graph simulated by platoon_graph via
/// v1, v2, v1.
LabeledGraph platoon_graph_bar();

/// Two-car platoon with polynomial modes; mode 2 loses the follower's
/// coupling term.
SwitchedSystem platoon_system();

/// Variant where mode 2 also drops the leader's thrust; unsafe.
SwitchedSystem platoon_system_modified();

/// Box state set [0,10]^2, initial velocity gap in [1,2], unsafe gap
/// at or below 0.2.
SafetySpec platoon_spec();

/// X0 = ball of squared radius 4, Xu = complement at 9; the random
/// LMI experiment's specification.
SafetySpec experiment_spec();

}  // namespace pcbf::data
