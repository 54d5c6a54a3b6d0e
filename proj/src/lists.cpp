#include "turan/lists.hpp"

#include <algorithm>

namespace turan {

const VertexSet& ListAssignment::list_of(const VertexSet& e) const {
    int idx = g_.index_of(e);
    if (idx < 0)
        throw ParameterError("edge " + e.to_string() + " is not in the list subgraph");
    return lists_[static_cast<std::size_t>(idx)];
}

Hypergraph ListAssignment::expanded_edges() const {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < g_.size(); ++i) {
        const VertexSet& e = g_.edge(i);
        const VertexSet& list = lists_[i];
        for (int x = list.first(); x >= 0; x = list.next(x)) {
            VertexSet lifted = e;
            lifted.add(x);
            out.push_back(lifted);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph(host_n_, host_r_, std::move(out));
}

ListAssignment compute_lists(const Hypergraph& host, const Hypergraph& g) {
    if (g.uniformity() != host.uniformity() - 1)
        throw PreconditionError("list subgraph must be (r-1)-uniform: host r = " +
                                std::to_string(host.uniformity()) + ", G has " +
                                std::to_string(g.uniformity()));
    if (g.vertex_count() != host.vertex_count())
        throw PreconditionError("list subgraph must share the host's vertex set");
    VertexSet vg = g.support();
    std::vector<VertexSet> lists;
    lists.reserve(g.size());
    for (const VertexSet& e : g.edges()) {
        VertexSet nb = neighborhood(host, e);
        if (nb.empty())  // no extension at all: e is not in the shadow
            throw PreconditionError("edge " + e.to_string() +
                                    " of G is not a sub-edge of the host");
        lists.push_back(nb - vg);
    }
    return ListAssignment(host, g, std::move(lists));
}

CommonListResult common_list_over_set(const Hypergraph& host, const VertexSet& w, int ell,
                                      int threshold) {
    const int r = host.uniformity();
    if (r < 2) throw ParameterError("common lists need uniformity >= 2");
    if (w.size() < r - 1)
        throw ParameterError("W must have at least r-1 vertices, got " +
                             std::to_string(w.size()));
    if (!is_superfull(host, ell, threshold))
        throw PreconditionError("host is not " + std::to_string(ell) +
                                "-superfull at threshold " + std::to_string(threshold));

    // G = all (r-1)-subsets of W.
    std::vector<int> mem = w.to_vector();
    std::vector<VertexSet> subs;
    for_each_subset(static_cast<int>(mem.size()), r - 1, [&](const VertexSet& pick) {
        VertexSet e(host.vertex_count());
        for (int i = pick.first(); i >= 0; i = pick.next(i))
            e.add(mem[static_cast<std::size_t>(i)]);
        subs.push_back(e);
    });

    for (const VertexSet& e : subs) {
        int d = codegree(host, e);
        if (d != ell)
            throw HypothesisViolated("sub-edge " + e.to_string() + " of W has codegree " +
                                     std::to_string(d) + ", expected exactly " +
                                     std::to_string(ell));
    }

    CommonListResult out;
    std::optional<VertexSet> common;
    std::optional<VertexSet> first_edge;
    for (const VertexSet& e : subs) {
        VertexSet list = neighborhood(host, e) - w;
        if (!common) {
            common = list;
            first_edge = e;
            continue;
        }
        if (!(list == *common)) {
            out.mismatch = {*first_edge, e};
            return out;
        }
    }
    out.common = common ? *common : VertexSet(host.vertex_count());
    return out;
}

}  // namespace turan
