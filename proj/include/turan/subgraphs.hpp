#pragma once

#include "turan/structures.hpp"

namespace turan {

// Greedy core extraction: repeatedly delete all edges through a sub-edge of
// codegree <= d until none is left. The result is (d+1)-full (possibly empty)
// and loses at most d edges per deleted sub-edge, so |F| >= |H| - d * |shadow|.
Hypergraph full_subgraph(const Hypergraph& h, int d);

// In a non-empty r*k-full r-graph, build a linear k-cycle constructively:
// take the graph shadow, grow a triangle to a k-cycle, lift the cycle's graph
// edges to hypergraph edges, and repair overlaps by swaps that enlarge the
// union of the lifted edges. Requires r >= 3, k >= 3; the fullness precondition
// is checked.
StructureWitness cycle_in_full(const Hypergraph& h, int k);

// Turn a minimal k-cycle (or k-path) in an ell-superfull host into a linear
// one: while two consecutive edges overlap in >= 2 vertices, re-embed one of
// them through a high-codegree sub-edge and a fresh vertex, growing the vertex
// set. With threshold >= r*k a fresh vertex always exists; for smaller
// thresholds (possible at desk scale) the repair can run out of vertices and
// raises RepairFailed.
StructureWitness repair_minimal(const Hypergraph& h, const StructureWitness& w, int ell,
                                int threshold);

}  // namespace turan
