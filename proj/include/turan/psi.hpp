#pragma once

#include <cstdint>

#include "turan/structures.hpp"

namespace turan {

// Membership test data for the complete-multipartite shadow subgraphs the
// sampling pipeline hunts for: G must be complete (r-1)-partite with r-1 parts
// of size t inside the shadow of the host.
struct PsiQuery {
    int t;
    int k;
    Hypergraph g;

    int ell() const { return (k - 1) / 2; }
};

// True iff every list of G in the host is larger than ell, and, when r = 3 and
// k is odd, every pair xy of G has an extension xy+a with
// min(d(xa), d(ya)) >= 2 and max(d(xa), d(ya)) >= 3k+1.
bool psi_check(const Hypergraph& host, const PsiQuery& q);

// Recover the parts of a complete multipartite hypergraph (same part <=> no
// common edge). Throws PreconditionError if g is not complete multipartite
// with equal part sizes t.
std::vector<std::vector<int>> multipartite_parts(const Hypergraph& g, int t);

struct PartiteSearchResult {
    SearchStatus status;  // found / absent / unknown (node limit)
    std::vector<std::vector<int>> parts;
    std::uint64_t nodes = 0;
};

// Exhaustive search for u disjoint parts of size t spanning a complete
// u-partite subgraph of the u-uniform g. Deterministic: the seed transversal
// runs over edges in order and parts grow with ascending vertices.
PartiteSearchResult find_complete_partite(const Hypergraph& g, int t,
                                          std::uint64_t node_limit = kDefaultSearchNodeLimit);

struct SamplePsiResult {
    bool success = false;
    std::optional<Hypergraph> g;  // the complete multipartite shadow subgraph
    std::vector<std::vector<int>> parts;
    VertexSet sample;             // the random vertex set T of this round
    std::size_t filtered_size = 0;  // |F|, the sub-edges surviving the filter
};

// One sampling round: draw T with p = 1/2 (one generator draw per vertex, in
// vertex order), keep sub-edges inside T with enough neighbors outside T, and
// look for a complete (r-1)-partite subgraph with parts of size t. Every f in
// `subedges` must have codegree >= l+1; for r = 3 and odd k each f must also
// have a witness extension (checked, and its extra vertex must avoid T).
SamplePsiResult sample_psi(const Hypergraph& host, const std::vector<VertexSet>& subedges,
                           int k, int t, std::uint64_t seed,
                           std::uint64_t node_limit = kDefaultSearchNodeLimit);

}  // namespace turan
