#include "turan/psi.hpp"

#include <algorithm>

#include "turan/lists.hpp"
#include "turan/rng.hpp"

namespace turan {

std::vector<std::vector<int>> multipartite_parts(const Hypergraph& g, int t) {
    const int u = g.uniformity();
    if (u < 2) throw PreconditionError("multipartite recovery needs uniformity >= 2");
    if (t < 1) throw ParameterError("part size must be >= 1");
    VertexSet verts = g.support();
    std::vector<int> vs = verts.to_vector();
    if (static_cast<int>(vs.size()) != u * t)
        throw PreconditionError("expected " + std::to_string(u * t) +
                                " vertices for " + std::to_string(u) + " parts of size " +
                                std::to_string(t) + ", got " + std::to_string(vs.size()));

    // Same part <=> never together in an edge.
    auto together = [&](int a, int b) {
        for (const VertexSet& e : g.edges())
            if (e.contains(a) && e.contains(b)) return true;
        return false;
    };
    std::vector<std::vector<int>> parts;
    std::vector<char> assigned(vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<int> part{vs[i]};
        assigned[i] = 1;
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (assigned[j]) continue;
            if (!together(vs[i], vs[j])) {
                part.push_back(vs[j]);
                assigned[j] = 1;
            }
        }
        parts.push_back(std::move(part));
    }
    if (static_cast<int>(parts.size()) != u)
        throw PreconditionError("vertex set splits into " + std::to_string(parts.size()) +
                                " parts, expected " + std::to_string(u));
    for (const auto& p : parts)
        if (static_cast<int>(p.size()) != t)
            throw PreconditionError("part size " + std::to_string(p.size()) +
                                    " differs from t = " + std::to_string(t));

    // Completeness: every transversal must be an edge, and nothing else fits.
    std::size_t expected = 1;
    for (int i = 0; i < u; ++i) expected *= static_cast<std::size_t>(t);
    if (g.size() != expected)
        throw PreconditionError("edge count " + std::to_string(g.size()) +
                                " differs from t^u = " + std::to_string(expected));
    std::vector<std::size_t> pick(static_cast<std::size_t>(u), 0);
    while (true) {
        VertexSet e(g.vertex_count());
        for (int i = 0; i < u; ++i)
            e.add(parts[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
        if (!g.contains(e))
            throw PreconditionError("transversal " + e.to_string() + " is not an edge");
        int i = u - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 == static_cast<std::size_t>(t))
            --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < u; ++j) pick[static_cast<std::size_t>(j)] = 0;
    }
    return parts;
}

bool psi_check(const Hypergraph& host, const PsiQuery& q) {
    const int r = host.uniformity();
    if (r < 3) throw ParameterError("psi membership is defined for hosts with r >= 3");
    if (q.g.uniformity() != r - 1)
        throw PreconditionError("candidate must be (r-1)-uniform");
    multipartite_parts(q.g, q.t);  // throws if malformed

    ListAssignment la = compute_lists(host, q.g);
    const int ell = q.ell();
    for (const VertexSet& l : la.lists())
        if (l.size() <= ell) return false;

    if (r == 3 && q.k % 2 == 1) {
        for (std::size_t i = 0; i < q.g.size(); ++i) {
            const VertexSet& e = q.g.edge(i);
            int x = e.first();
            int y = e.next(x);
            const VertexSet& list = la.lists()[i];
            bool ok = false;
            for (int a = list.first(); a >= 0 && !ok; a = list.next(a)) {
                VertexSet xa(host.vertex_count(), {x, a});
                VertexSet ya(host.vertex_count(), {y, a});
                int dx = codegree(host, xa);
                int dy = codegree(host, ya);
                if (std::min(dx, dy) >= 2 && std::max(dx, dy) >= 3 * q.k + 1) ok = true;
            }
            if (!ok) return false;
        }
    }
    return true;
}

namespace {

struct PartiteSearcher {
    const Hypergraph& g;
    int u, t, n;
    std::uint64_t limit;
    std::uint64_t nodes = 0;
    bool limit_hit = false;
    std::vector<std::vector<int>> parts;
    VertexSet taken;

    PartiteSearcher(const Hypergraph& g_, int t_, std::uint64_t limit_)
        : g(g_), u(g_.uniformity()), t(t_), n(g_.vertex_count()), limit(limit_),
          taken(g_.vertex_count()) {}

    bool tick() {
        if (nodes >= limit) {
            limit_hit = true;
            return false;
        }
        ++nodes;
        return true;
    }

    // Every transversal using y for part `pi` and current members elsewhere.
    bool compatible(int pi, int y) {
        std::vector<int> other;
        for (int j = 0; j < u; ++j)
            if (j != pi) other.push_back(j);
        std::vector<std::size_t> pick(other.size(), 0);
        while (true) {
            VertexSet e(n);
            e.add(y);
            for (std::size_t idx = 0; idx < other.size(); ++idx)
                e.add(parts[static_cast<std::size_t>(other[idx])][pick[idx]]);
            if (!g.contains(e)) return false;
            std::size_t i = other.size();
            while (i > 0 &&
                   pick[i - 1] + 1 == parts[static_cast<std::size_t>(other[i - 1])].size())
                --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < other.size(); ++j) pick[j] = 0;
        }
        return true;
    }

    // Fill part `pi` up to size t with vertices above its current last member.
    bool fill(int pi) {
        if (pi == u) return true;
        if (static_cast<int>(parts[static_cast<std::size_t>(pi)].size()) == t)
            return fill(pi + 1);
        if (!tick()) return false;
        int from = parts[static_cast<std::size_t>(pi)].back() + 1;
        for (int y = from; y < n; ++y) {
            if (taken.contains(y)) continue;
            if (!compatible(pi, y)) continue;
            parts[static_cast<std::size_t>(pi)].push_back(y);
            taken.add(y);
            if (fill(pi)) return true;
            taken.remove(y);
            parts[static_cast<std::size_t>(pi)].pop_back();
            if (limit_hit) return false;
        }
        return false;
    }

    PartiteSearchResult run() {
        // The part minima, ordered, form an edge; seed from each edge in order.
        for (const VertexSet& seed : g.edges()) {
            if (!tick()) break;
            parts.assign(static_cast<std::size_t>(u), {});
            taken = VertexSet(n);
            int i = 0;
            for (int v = seed.first(); v >= 0; v = seed.next(v), ++i) {
                parts[static_cast<std::size_t>(i)].push_back(v);
                taken.add(v);
            }
            if (fill(0)) return {SearchStatus::found, parts, nodes};
            if (limit_hit) return {SearchStatus::unknown, {}, nodes};
        }
        if (limit_hit) return {SearchStatus::unknown, {}, nodes};
        return {SearchStatus::absent, {}, nodes};
    }
};

}  // namespace

PartiteSearchResult find_complete_partite(const Hypergraph& g, int t,
                                          std::uint64_t node_limit) {
    if (t < 1) throw ParameterError("part size must be >= 1");
    if (g.uniformity() < 2)
        throw ParameterError("complete multipartite search needs uniformity >= 2");
    if (g.vertex_count() < g.uniformity() * t || g.empty())
        return {SearchStatus::absent, {}, 0};
    return PartiteSearcher(g, t, node_limit).run();
}

SamplePsiResult sample_psi(const Hypergraph& host, const std::vector<VertexSet>& subedges,
                           int k, int t, std::uint64_t seed, std::uint64_t node_limit) {
    const int r = host.uniformity();
    if (r < 3) throw ParameterError("sampling needs a host with r >= 3");
    if (k < 4) throw ParameterError("sampling needs k >= 4");
    if (t < 1) throw ParameterError("part size must be >= 1");
    const int ell = (k - 1) / 2;
    const int m = ell + 1;
    const bool odd3 = r == 3 && k % 2 == 1;

    // Preconditions: enough extensions, plus a witness extension when r = 3, k odd.
    std::vector<int> witness_color(subedges.size(), -1);
    for (std::size_t i = 0; i < subedges.size(); ++i) {
        const VertexSet& f = subedges[i];
        if (f.size() != r - 1)
            throw ParameterError("sub-edge " + f.to_string() + " must have r-1 vertices");
        VertexSet nb = neighborhood(host, f);
        if (nb.size() < m)
            throw PreconditionError("sub-edge " + f.to_string() + " has codegree " +
                                    std::to_string(nb.size()) + ", needs >= " +
                                    std::to_string(m));
        if (odd3) {
            int x = f.first();
            int y = f.next(x);
            for (int a = nb.first(); a >= 0; a = nb.next(a)) {
                VertexSet xa(host.vertex_count(), {x, a});
                VertexSet ya(host.vertex_count(), {y, a});
                int dx = codegree(host, xa);
                int dy = codegree(host, ya);
                if (std::min(dx, dy) >= 2 && std::max(dx, dy) >= 3 * k + 1) {
                    witness_color[i] = a;
                    break;
                }
            }
            if (witness_color[i] < 0)
                throw PreconditionError("sub-edge " + f.to_string() +
                                        " has no witness extension with the degree "
                                        "conditions");
        }
    }

    SamplePsiResult out;
    // One generator draw per vertex, in vertex order.
    SplitMix64 rng(seed);
    VertexSet sample(host.vertex_count());
    for (int v = 0; v < host.vertex_count(); ++v)
        if (rng.next_bit()) sample.add(v);
    out.sample = sample;

    std::vector<VertexSet> filtered;
    for (std::size_t i = 0; i < subedges.size(); ++i) {
        const VertexSet& f = subedges[i];
        if (!f.subset_of(sample)) continue;
        VertexSet outside = neighborhood(host, f) - sample;
        if (outside.size() < m) continue;
        if (odd3 && sample.contains(witness_color[i])) continue;
        filtered.push_back(f);
    }
    out.filtered_size = filtered.size();
    if (filtered.empty()) return out;

    Hypergraph candidates(host.vertex_count(), r - 1, std::move(filtered));
    PartiteSearchResult found = find_complete_partite(candidates, t, node_limit);
    if (found.status != SearchStatus::found) return out;

    // Materialize the complete multipartite subgraph from the parts.
    std::vector<VertexSet> edges;
    std::vector<std::size_t> pick(static_cast<std::size_t>(r - 1), 0);
    while (true) {
        VertexSet e(host.vertex_count());
        for (int i = 0; i < r - 1; ++i)
            e.add(found.parts[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
        edges.push_back(e);
        int i = r - 2;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 ==
                             found.parts[static_cast<std::size_t>(i)].size())
            --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r - 1; ++j) pick[static_cast<std::size_t>(j)] = 0;
    }
    Hypergraph g(host.vertex_count(), r - 1, std::move(edges));
    TURAN_ENSURE(psi_check(host, PsiQuery{t, k, g}));
    out.success = true;
    out.g = g;
    out.parts = found.parts;
    return out;
}

}  // namespace turan
