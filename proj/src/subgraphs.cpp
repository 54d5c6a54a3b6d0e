#include "turan/subgraphs.hpp"

#include <algorithm>
#include <map>

namespace turan {

Hypergraph full_subgraph(const Hypergraph& h, int d) {
    if (d < 1) throw ParameterError("full_subgraph needs d >= 1");
    if (h.uniformity() < 2) return h;
    std::vector<VertexSet> surviving = h.edges();
    while (true) {
        // Codegrees of the surviving sub-edges; smallest sparse sub-edge first.
        std::map<VertexSet, int> deg;
        for (const VertexSet& e : surviving) {
            std::vector<int> mem = e.to_vector();
            for (std::size_t skip = 0; skip < mem.size(); ++skip) {
                VertexSet f = e;
                f.remove(mem[skip]);
                ++deg[f];
            }
        }
        const VertexSet* sparse = nullptr;
        for (const auto& [f, c] : deg)
            if (c <= d) {
                sparse = &f;
                break;
            }
        if (!sparse) break;
        std::vector<VertexSet> next;
        for (const VertexSet& e : surviving)
            if (!sparse->subset_of(e)) next.push_back(e);
        surviving = std::move(next);
    }
    return Hypergraph(h.vertex_count(), h.uniformity(), std::move(surviving));
}

StructureWitness cycle_in_full(const Hypergraph& h, int k) {
    const int r = h.uniformity();
    if (r < 3) throw ParameterError("cycle_in_full needs r >= 3");
    if (k < 3) throw ParameterError("cycle_in_full needs k >= 3");
    if (h.empty()) throw PreconditionError("host is empty");
    {
        FullnessReport rep = fullness(h, r * k);
        if (!rep.is_full)
            throw PreconditionError("host is not " + std::to_string(r * k) +
                                    "-full: sub-edge " + rep.violating_subedge->to_string() +
                                    " has codegree " +
                                    std::to_string(rep.min_nonzero_codegree));
    }
    const int n = h.vertex_count();
    Hypergraph graph = r == 2 ? h : shadow(h, r - 2);
    auto adjacent = [&](int u, int v) {
        VertexSet e(n);
        e.add(u);
        e.add(v);
        return graph.contains(e);
    };

    // Seed triangle: smallest in vertex order. Any edge of h projects to a
    // clique in the graph shadow, so one exists.
    std::vector<int> cyc;
    for (int a = 0; a < n && cyc.empty(); ++a)
        for (int b = a + 1; b < n && cyc.empty(); ++b) {
            if (!adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c)
                if (adjacent(a, c) && adjacent(b, c)) {
                    cyc = {a, b, c};
                    break;
                }
        }
    TURAN_ENSURE(!cyc.empty());

    // Grow: replace a cycle edge u-v by u-z-v through a fresh triangle vertex.
    while (static_cast<int>(cyc.size()) < k) {
        VertexSet on_cycle(n);
        for (int v : cyc) on_cycle.add(v);
        bool grew = false;
        for (std::size_t i = 0; i < cyc.size() && !grew; ++i) {
            int u = cyc[i];
            int v = cyc[(i + 1) % cyc.size()];
            for (int z = 0; z < n; ++z) {
                if (on_cycle.contains(z)) continue;
                if (adjacent(u, z) && adjacent(v, z)) {
                    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(i) + 1, z);
                    grew = true;
                    break;
                }
            }
        }
        TURAN_ENSURE(grew);
    }

    // Lift each graph edge to a host edge through it, then swap spare vertices
    // until the union has full size k(r-1), i.e. the lift is a linear cycle.
    std::vector<VertexSet> pairs;
    std::vector<VertexSet> lifted;
    for (int i = 0; i < k; ++i) {
        VertexSet f(n);
        f.add(cyc[static_cast<std::size_t>(i)]);
        f.add(cyc[static_cast<std::size_t>((i + 1) % static_cast<std::size_t>(k))]);
        pairs.push_back(f);
        const VertexSet* pick = nullptr;
        for (const VertexSet& e : h.edges())
            if (f.subset_of(e)) {
                pick = &e;
                break;
            }
        TURAN_ENSURE(pick != nullptr);
        lifted.push_back(*pick);
    }

    std::size_t swaps = 0;
    const std::size_t swap_cap = h.size();  // the union grows, so this is ample
    while (true) {
        VertexSet everything(n);
        for (const VertexSet& e : lifted) everything |= e;
        // A spare vertex of e_i sitting in any other lifted edge is a defect.
        int bad_i = -1, bad_v = -1;
        for (int i = 0; i < k && bad_i < 0; ++i) {
            VertexSet spare = lifted[static_cast<std::size_t>(i)] -
                              pairs[static_cast<std::size_t>(i)];
            for (int v = spare.first(); v >= 0; v = spare.next(v)) {
                bool elsewhere = false;
                for (int j = 0; j < k && !elsewhere; ++j)
                    if (j != i && lifted[static_cast<std::size_t>(j)].contains(v))
                        elsewhere = true;
                if (elsewhere) {
                    bad_i = i;
                    bad_v = v;
                    break;
                }
            }
        }
        if (bad_i < 0) break;
        if (++swaps > swap_cap)
            throw InternalError("swap repair did not terminate");
        VertexSet sub = lifted[static_cast<std::size_t>(bad_i)];
        sub.remove(bad_v);
        VertexSet candidates = neighborhood(h, sub) - everything;
        TURAN_ENSURE(!candidates.empty());  // |Z| >= rk > |Y|
        sub.add(candidates.first());
        lifted[static_cast<std::size_t>(bad_i)] = sub;
    }

    StructureWitness w{StructureKind(StructureFamily::linear_cycle, k), lifted, {}};
    for (int i = 0; i < k; ++i)
        w.connectors.push_back(cyc[static_cast<std::size_t>((i + 1) % static_cast<std::size_t>(k))]);
    TURAN_ENSURE(verify_witness(h, w));
    return w;
}

StructureWitness repair_minimal(const Hypergraph& h, const StructureWitness& w, int ell,
                                int threshold) {
    const int k = w.kind.k;
    const bool cyclic = is_cycle_family(w.kind.family);
    StructureFamily as_minimal =
        cyclic ? StructureFamily::minimal_cycle : StructureFamily::minimal_path;
    StructureFamily as_linear =
        cyclic ? StructureFamily::linear_cycle : StructureFamily::linear_path;
    if (w.kind.family == StructureFamily::berge_path ||
        w.kind.family == StructureFamily::berge_cycle)
        throw PreconditionError("repair needs a minimal (or linear) witness");
    if (!is_superfull(h, ell, threshold))
        throw PreconditionError("host is not " + std::to_string(ell) +
                                "-superfull at threshold " + std::to_string(threshold));
    StructureWitness cur{StructureKind(as_minimal, k), w.edges, w.connectors};
    {
        VerifyReport rep = verify_witness_report(h, cur);
        if (!rep.ok)
            throw PreconditionError(std::string("witness does not verify as ") +
                                    family_name(as_minimal) + ": " + fault_name(rep.fault));
    }

    const int pairs = cyclic ? k : k - 1;
    while (true) {
        int fat_i = -1;
        for (int i = 0; i < pairs; ++i) {
            const VertexSet& f = cur.edges[static_cast<std::size_t>(i)];
            const VertexSet& g = cur.edges[static_cast<std::size_t>((i + 1) % k)];
            if ((f & g).size() >= 2) {
                fat_i = i;
                break;
            }
        }
        if (fat_i < 0) break;

        VertexSet f = cur.edges[static_cast<std::size_t>(fat_i)];
        VertexSet g = cur.edges[static_cast<std::size_t>((fat_i + 1) % k)];
        VertexSet overlap = f & g;
        VertexSet on_cycle(h.vertex_count());
        for (const VertexSet& e : cur.edges) on_cycle |= e;

        // Drop one shared vertex of f whose remaining sub-edge has codegree
        // above the threshold; superfullness guarantees one of any two works.
        bool replaced = false;
        for (int x = overlap.first(); x >= 0 && !replaced; x = overlap.next(x)) {
            VertexSet sub = f;
            sub.remove(x);
            if (codegree(h, sub) <= threshold) continue;
            VertexSet fresh = neighborhood(h, sub) - on_cycle;
            if (fresh.empty())
                throw RepairFailed("no vertex outside the structure extends sub-edge " +
                                   sub.to_string());
            sub.add(fresh.first());
            cur.edges[static_cast<std::size_t>(fat_i)] = sub;
            replaced = true;
        }
        TURAN_ENSURE(replaced);  // superfullness: at most one low sub-edge per edge

        // Connectors may have moved; re-derive them from the new edge set.
        cur.connectors.clear();
        for (int i = 0; i < pairs; ++i)
            cur.connectors.push_back((cur.edges[static_cast<std::size_t>(i)] &
                                      cur.edges[static_cast<std::size_t>((i + 1) % k)])
                                         .first());
        VerifyReport rep = verify_witness_report(h, cur);
        TURAN_ENSURE(rep.ok);
    }

    StructureWitness out{StructureKind(as_linear, k), cur.edges, cur.connectors};
    TURAN_ENSURE(verify_witness(h, out));
    return out;
}

}  // namespace turan
