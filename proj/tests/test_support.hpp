#pragma once

// Shared oracles and instance builders for the test suites. Everything here is
// deliberately independent of the library's own arithmetic and search paths:
// binomials come from Pascal's triangle, optima from plain enumeration, SDR
// answers from trying every assignment.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/structures.hpp"

namespace testsupport {

// Desk-scale Pascal triangle; callers stay well inside long range.
inline long binom_oracle(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::vector<long> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j)
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

// 1-based edge maker, so tests can quote examples verbatim.
inline turan::VertexSet vs1(int n, std::initializer_list<int> one_based) {
    turan::VertexSet s(n);
    for (int v : one_based) s.add(v - 1);
    return s;
}

inline turan::Hypergraph hg1(int n, int r,
                             std::initializer_list<std::initializer_list<int>> edges) {
    std::vector<turan::VertexSet> es;
    for (const auto& e : edges) es.push_back(vs1(n, e));
    return turan::Hypergraph(n, r, std::move(es));
}

// All r-sets of [0,n) containing vertex 0 (a 1-based "star at 1").
inline turan::Hypergraph star_at_first(int n, int r) {
    std::vector<turan::VertexSet> es;
    turan::for_each_subset(n, r, [&](const turan::VertexSet& e) {
        if (e.contains(0)) es.push_back(e);
    });
    return turan::Hypergraph(n, r, std::move(es));
}

// Exhaustive SDR oracle: try every assignment.
inline bool sdr_exists_oracle(const std::vector<turan::VertexSet>& sets) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == sets.size()) return true;
        for (int v = sets[i].first(); v >= 0; v = sets[i].next(v)) {
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
            chosen.push_back(v);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// Exact Turán value by recursive enumeration over candidate r-sets with
// monotone pruning: once a family holds the structure every superset does, so
// that subtree is skipped. Detection is the full from-scratch search.
inline long brute_force_turan(int n, int r, const turan::StructureKind& kind) {
    std::vector<turan::VertexSet> candidates;
    if (r <= n)
        turan::for_each_subset(n, r, [&](const turan::VertexSet& e) { candidates.push_back(e); });
    std::vector<turan::VertexSet> family;
    long best = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (static_cast<long>(family.size()) > best) best = static_cast<long>(family.size());
        if (idx == candidates.size()) return;
        if (static_cast<long>(family.size() + (candidates.size() - idx)) <= best) {
            // Even taking everything left cannot beat the best found; since we
            // only want the maximum value this cut loses nothing.
            return;
        }
        family.push_back(candidates[idx]);
        turan::Hypergraph trial(n, r, family);
        if (turan::find_structure(trial, kind).status == turan::SearchStatus::absent)
            self(self, idx + 1);
        family.pop_back();
        self(self, idx + 1);
    };
    rec(rec, 0);
    return best;
}

// Longest simple path (edge count) in a graph, by plain DFS from every vertex.
inline int longest_path_oracle(const turan::Hypergraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const turan::VertexSet& e : g.edges()) {
        int a = e.first();
        int b = e.next(a);
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int best = 0;
    auto rec = [&](auto&& self, int v, int len) -> void {
        best = std::max(best, len);
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            self(self, w, len + 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int v = 0; v < n; ++v) {
        used[static_cast<std::size_t>(v)] = 1;
        rec(rec, v, 0);
        used[static_cast<std::size_t>(v)] = 0;
    }
    return best;
}

}  // namespace testsupport
