#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

enum class StructureFamily {
    linear_path,
    linear_cycle,
    minimal_path,
    minimal_cycle,
    berge_path,
    berge_cycle,
};

const char* family_name(StructureFamily f);
std::optional<StructureFamily> family_from_name(const std::string& name);

inline bool is_cycle_family(StructureFamily f) {
    return f == StructureFamily::linear_cycle || f == StructureFamily::minimal_cycle ||
           f == StructureFamily::berge_cycle;
}

// A structure class: family plus length k (edge count). Linear and minimal
// cycles need k >= 3, Berge cycles k >= 2, paths k >= 1.
struct StructureKind {
    StructureFamily family;
    int k;

    StructureKind(StructureFamily family_, int k_);
};

// Ordered edges plus the connector vertices tying consecutive edges together.
// Connector layout by family:
//   linear/minimal path:  k-1 entries, connectors[i] in edges[i] & edges[i+1]
//   linear/minimal/berge cycle: k entries, connectors[i] in edges[i] & edges[i+1 mod k]
//   berge path: k+1 entries v_0..v_k with v_{i-1}, v_i in edges[i-1] (0-based: see
//               verify_witness) -- the two extremes live only in the end edges.
struct StructureWitness {
    StructureKind kind;
    std::vector<VertexSet> edges;
    std::vector<int> connectors;
};

enum class WitnessFault {
    none,
    wrong_edge_count,
    edge_not_in_host,
    duplicate_edge,
    wrong_connector_count,
    connector_outside_edges,
    duplicate_connector,
    consecutive_intersection_wrong,
    nonconsecutive_edges_intersect,
    common_vertex_in_all_edges,
};

const char* fault_name(WitnessFault f);

struct VerifyReport {
    bool ok = true;
    WitnessFault fault = WitnessFault::none;
    // Index of the offending edge/connector where meaningful, else -1.
    int where = -1;
};

VerifyReport verify_witness_report(const Hypergraph& h, const StructureWitness& w);
bool verify_witness(const Hypergraph& h, const StructureWitness& w);

// Lower bound on the vertices any witness of the kind occupies; exact for the
// linear and minimal families. find_structure short-circuits below it.
int min_witness_vertices(const StructureKind& kind, int r);

enum class SearchStatus {
    found,
    absent,   // exhaustive: a proof of absence at this scale
    unknown,  // node limit hit before exhaustion
};

struct SearchResult {
    SearchStatus status;
    std::optional<StructureWitness> witness;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchNodeLimit = 100'000'000;

// Exhaustive backtracking search. Edges are tried in their stored order and
// the first witness in that order is returned, so results are reproducible.
SearchResult find_structure(const Hypergraph& h, const StructureKind& kind,
                            std::uint64_t node_limit = kDefaultSearchNodeLimit);

// Same search restricted to witnesses that use `e` (which must be an edge of
// h). This is the incremental form: when an edge is added to a free family,
// any new structure must pass through it.
SearchResult find_structure_using_edge(const Hypergraph& h, const StructureKind& kind,
                                       const VertexSet& e,
                                       std::uint64_t node_limit = kDefaultSearchNodeLimit);

// Witness JSON: {"kind", "k", "edges" (1-based), "connectors" (1-based), "verified"}.
std::string witness_to_json(const StructureWitness& w, bool verified);
StructureWitness witness_from_json(const std::string& json_text, int vertex_count);

}  // namespace turan
