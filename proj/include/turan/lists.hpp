#pragma once

#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Color lists of a shadow subgraph G inside a host H: for each (r-1)-edge e of
// G, list(e) = N_H(e) minus V(G). Immutable once computed.
class ListAssignment {
public:
    ListAssignment(const Hypergraph& host, Hypergraph g, std::vector<VertexSet> lists)
        : host_n_(host.vertex_count()), host_r_(host.uniformity()), g_(std::move(g)),
          lists_(std::move(lists)) {}

    const Hypergraph& subgraph() const { return g_; }
    const std::vector<VertexSet>& lists() const { return lists_; }

    // List of one edge of G (by value; throws if e is not in G).
    const VertexSet& list_of(const VertexSet& e) const;

    // The expansion: every e + x with x in list(e), as an r-graph.
    Hypergraph expanded_edges() const;

private:
    int host_n_;
    int host_r_;
    Hypergraph g_;
    std::vector<VertexSet> lists_;
};

// G must be a subgraph of the 1-shadow of H (checked edge by edge).
ListAssignment compute_lists(const Hypergraph& host, const Hypergraph& g);

// Over W: take G = all (r-1)-subsets of W, require each to have codegree
// exactly `ell` (HypothesisViolated otherwise), and report the common list if
// all lists agree.
struct CommonListResult {
    std::optional<VertexSet> common;  // present iff all lists equal
    // First witnessing pair of sub-edges with different lists.
    std::optional<std::pair<VertexSet, VertexSet>> mismatch;
};

CommonListResult common_list_over_set(const Hypergraph& host, const VertexSet& w, int ell,
                                      int threshold);

}  // namespace turan
