#include "turan/hypergraph.hpp"

#include <algorithm>
#include <cmath>

#include "turan/rng.hpp"

namespace turan {

namespace {

void check_params(int n, int r) {
    if (n < 0 || n > VertexSet::kMaxUniverse)
        throw ParameterError("vertex count must be in [0,128], got " + std::to_string(n));
    if (r < 1 || r > VertexSet::kMaxUniverse)
        throw ParameterError("uniformity must be in [1,128], got " + std::to_string(r));
}

}  // namespace

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) { check_params(n, r); }

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    check_params(n, r);
    for (const VertexSet& e : edges_) {
        if (e.size() != r_)
            throw ParameterError("edge " + e.to_string() + " has " +
                                 std::to_string(e.size()) + " vertices, expected " +
                                 std::to_string(r_));
        for (int v = e.first(); v >= 0; v = e.next(v))
            if (v >= n_)
                throw ParameterError("edge " + e.to_string() + " uses vertex " +
                                     std::to_string(v) + " >= n = " + std::to_string(n_));
    }
    // Normalize universes so comparisons are word-wise.
    for (VertexSet& e : edges_) {
        VertexSet norm(n_);
        for (int v = e.first(); v >= 0; v = e.next(v)) norm.add(v);
        e = norm;
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw ParameterError("duplicate edge " + dup->to_string());
}

bool Hypergraph::contains(const VertexSet& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Hypergraph::index_of(const VertexSet& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

VertexSet Hypergraph::support() const {
    VertexSet s(n_);
    for (const VertexSet& e : edges_) s |= e;
    return s;
}

void for_each_subset(int n, int r, const std::function<void(const VertexSet&)>& out) {
    if (r < 0 || r > n) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s(n);
        for (int v : idx) s.add(v);
        out(s);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

// All (size-s)-subsets of the members of `e`.
void subsets_of_edge(const VertexSet& e, int keep,
                     const std::function<void(const VertexSet&)>& out) {
    std::vector<int> mem = e.to_vector();
    int m = static_cast<int>(mem.size());
    std::vector<int> idx(static_cast<std::size_t>(keep));
    for (int i = 0; i < keep; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s(e.universe());
        for (int i : idx) s.add(mem[static_cast<std::size_t>(i)]);
        out(s);
        int i = keep - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - keep + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < keep; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

Hypergraph shadow(const Hypergraph& h, int s) {
    int r = h.uniformity();
    if (s < 1 || s > r - 1)
        throw ParameterError("shadow order s must satisfy 1 <= s <= r-1, got s = " +
                             std::to_string(s) + " with r = " + std::to_string(r));
    std::vector<VertexSet> subs;
    for (const VertexSet& e : h.edges())
        subsets_of_edge(e, r - s, [&](const VertexSet& f) { subs.push_back(f); });
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    return Hypergraph(h.vertex_count(), r - s, std::move(subs));
}

int codegree(const Hypergraph& h, const VertexSet& s) {
    if (s.size() > h.uniformity())
        throw ParameterError("codegree set " + s.to_string() + " larger than uniformity " +
                             std::to_string(h.uniformity()));
    int count = 0;
    for (const VertexSet& e : h.edges())
        if (s.subset_of(e)) ++count;
    return count;
}

VertexSet neighborhood(const Hypergraph& h, const VertexSet& s) {
    if (s.size() != h.uniformity() - 1)
        throw ParameterError("neighborhood needs |S| = r-1; got |S| = " +
                             std::to_string(s.size()) + ", r = " +
                             std::to_string(h.uniformity()));
    VertexSet nb(h.vertex_count());
    for (const VertexSet& e : h.edges())
        if (s.subset_of(e)) nb |= (e - s);
    return nb;
}

Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& x) {
    std::vector<VertexSet> keep;
    for (const VertexSet& e : h.edges())
        if (!e.intersects(x)) keep.push_back(e);
    return Hypergraph(h.vertex_count(), h.uniformity(), std::move(keep));
}

FullnessReport fullness(const Hypergraph& h, int d) {
    if (d < 1) throw ParameterError("fullness threshold must be >= 1");
    FullnessReport rep;
    if (h.empty()) return rep;  // vacuously full, min codegree reported as 0
    Hypergraph sh = h.uniformity() == 1 ? Hypergraph(h.vertex_count(), 1) : shadow(h, 1);
    // A 1-uniform hypergraph has no sub-edges in this sense; treat as full.
    int best = 0;
    for (const VertexSet& f : sh.edges()) {
        int c = codegree(h, f);
        if (best == 0 || c < best) best = c;
        if (c < d && !rep.violating_subedge) {
            rep.is_full = false;
            rep.violating_subedge = f;
        }
    }
    rep.min_nonzero_codegree = best;
    return rep;
}

bool is_superfull(const Hypergraph& h, int ell, int threshold) {
    if (ell < 1 || threshold < 1)
        throw ParameterError("is_superfull needs ell >= 1 and threshold >= 1");
    FullnessReport base = fullness(h, ell);
    if (!base.is_full)
        throw PreconditionError("host is not " + std::to_string(ell) +
                                "-full: sub-edge " + base.violating_subedge->to_string() +
                                " has codegree below " + std::to_string(ell));
    if (h.uniformity() < 2) return true;
    for (const VertexSet& e : h.edges()) {
        int low = 0;
        subsets_of_edge(e, h.uniformity() - 1, [&](const VertexSet& f) {
            if (codegree(h, f) <= threshold) ++low;
        });
        if (low > 1) return false;
    }
    return true;
}

bool is_sparse(const Hypergraph& h, int t, int c) {
    if (t < 1 || t > h.uniformity())
        throw ParameterError("sparseness needs 1 <= t <= r, got t = " + std::to_string(t));
    if (c < 0) throw ParameterError("sparseness cap must be >= 0");
    // Only t-sets inside an edge can exceed 0, so count within edges.
    std::vector<VertexSet> tsets;
    for (const VertexSet& e : h.edges())
        subsets_of_edge(e, t, [&](const VertexSet& f) { tsets.push_back(f); });
    std::sort(tsets.begin(), tsets.end());
    std::size_t i = 0;
    while (i < tsets.size()) {
        std::size_t j = i;
        while (j < tsets.size() && tsets[j] == tsets[i]) ++j;
        if (static_cast<int>(j - i) > c) return false;
        i = j;
    }
    return true;
}

Hypergraph complete_hypergraph(int n, int r) {
    if (r > n)
        throw ParameterError("complete hypergraph needs r <= n, got r = " +
                             std::to_string(r) + ", n = " + std::to_string(n));
    std::vector<VertexSet> edges;
    for_each_subset(n, r, [&](const VertexSet& e) { edges.push_back(e); });
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph random_hypergraph(int n, int r, double p, std::uint64_t seed) {
    if (r > n) throw ParameterError("random hypergraph needs r <= n");
    if (!(p >= 0.0 && p <= 1.0))
        throw ParameterError("inclusion probability must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<VertexSet> edges;
    for_each_subset(n, r, [&](const VertexSet& e) {
        if (rng.next_double() < p) edges.push_back(e);
    });
    return Hypergraph(n, r, std::move(edges));
}

}  // namespace turan
