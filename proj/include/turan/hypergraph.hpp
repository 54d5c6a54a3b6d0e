#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "turan/vertex_set.hpp"

namespace turan {

// r-uniform hypergraph on labeled vertices {0,...,n-1}. Edges are a
// duplicate-free set of r-element VertexSets, kept sorted in the ascending
// member-list order, so iteration and all reports are deterministic.
// Immutable after construction; safe to share read-only across threads.
class Hypergraph {
public:
    // Empty edge set. r = 1 is admitted: iterated shadows bottom out at 1-sets.
    Hypergraph(int n, int r);

    // Validates sizes and labels, sorts, rejects duplicates.
    Hypergraph(int n, int r, std::vector<VertexSet> edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(std::size_t i) const { return edges_[i]; }

    bool contains(const VertexSet& e) const;
    // Index in edge order, or -1.
    int index_of(const VertexSet& e) const;

    // Union of all edges.
    VertexSet support() const;

    bool operator==(const Hypergraph& o) const {
        return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_;
    }

private:
    int n_;
    int r_;
    std::vector<VertexSet> edges_;
};

// Fullness verdict for a codegree threshold d: is every sub-edge contained in
// at least d edges? Carries a witness when not.
struct FullnessReport {
    bool is_full = true;
    std::optional<VertexSet> violating_subedge;
    // Smallest codegree over the shadow; 0 for an empty hypergraph.
    int min_nonzero_codegree = 0;
};

// The (r-s)-graph of all (r-s)-sets contained in some edge. 1 <= s <= r-1.
Hypergraph shadow(const Hypergraph& h, int s = 1);

// Number of edges containing S. Requires |S| <= r.
int codegree(const Hypergraph& h, const VertexSet& s);

// {x : S + x is an edge}. Defined for |S| = r-1; |result| == codegree(h, S).
VertexSet neighborhood(const Hypergraph& h, const VertexSet& s);

// Edges disjoint from X; vertex labels unchanged.
Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& x);

FullnessReport fullness(const Hypergraph& h, int d);

inline bool is_full(const Hypergraph& h, int d) { return fullness(h, d).is_full; }

// Every edge has at most one sub-edge of codegree <= threshold. The host must
// already be ell-full; that is a stated hypothesis, so violating it is an error.
bool is_superfull(const Hypergraph& h, int ell, int threshold);

// Every t-set of vertices lies in at most c edges. c = 1 is t-linearity.
bool is_sparse(const Hypergraph& h, int t, int c);

// All C(n,r) edges.
Hypergraph complete_hypergraph(int n, int r);

// Each r-set kept independently with probability p. The generator draws one
// word per r-set in edge order, so a seed pins the instance exactly.
Hypergraph random_hypergraph(int n, int r, double p, std::uint64_t seed);

// Enumerates all r-subsets of [0,n) in edge order into `out`.
void for_each_subset(int n, int r, const std::function<void(const VertexSet&)>& out);

}  // namespace turan
