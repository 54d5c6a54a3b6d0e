#include <doctest.h>

#include "test_support.hpp"
#include "turan/expansion.hpp"
#include "turan/lists.hpp"
#include "turan/rng.hpp"

using namespace turan;
using testsupport::hg1;
using testsupport::vs1;

namespace {

StructureWitness shadow_path(std::vector<VertexSet> edges) {
    StructureWitness w{StructureKind(StructureFamily::linear_path,
                                     static_cast<int>(edges.size())),
                       std::move(edges),
                       {}};
    for (std::size_t i = 0; i + 1 < w.edges.size(); ++i)
        w.connectors.push_back((w.edges[i] & w.edges[i + 1]).first());
    return w;
}

// A long path of pairs 0-1, 1-2, ..., plus host triples giving each pair the
// color set `colors`.
Hypergraph path_host(int n, int edges, const std::vector<int>& colors) {
    std::vector<VertexSet> es;
    for (int i = 0; i < edges; ++i)
        for (int c : colors) es.push_back(VertexSet(n, {i, i + 1, c}));
    return Hypergraph(n, 3, es);
}

StructureWitness pair_path(int n, int edges) {
    std::vector<VertexSet> ps;
    for (int i = 0; i < edges; ++i) ps.push_back(VertexSet(n, {i, i + 1}));
    return shadow_path(std::move(ps));
}

}  // namespace

TEST_CASE("expand_witness: singleton lists") {
    Hypergraph h = hg1(6, 3, {{1, 2, 5}, {2, 3, 6}});
    auto expanded = expand_witness(h, shadow_path({vs1(6, {1, 2}), vs1(6, {2, 3})}));
    REQUIRE(expanded.has_value());
    CHECK(expanded->edges[0] == vs1(6, {1, 2, 5}));
    CHECK(expanded->edges[1] == vs1(6, {2, 3, 6}));

    // Both extensions need the same color: no SDR.
    Hypergraph clash = hg1(5, 3, {{1, 2, 5}, {2, 3, 5}});
    CHECK_FALSE(
        expand_witness(clash, shadow_path({vs1(5, {1, 2}), vs1(5, {2, 3})})).has_value());
}

TEST_CASE("expand_witness: cycles too") {
    // Triangle of pairs, each extending through its own outside color.
    Hypergraph host = hg1(7, 3, {{1, 2, 5}, {2, 3, 6}, {1, 3, 7}});
    StructureWitness tri{StructureKind(StructureFamily::linear_cycle, 3),
                         {VertexSet(7, {0, 1}), VertexSet(7, {1, 2}), VertexSet(7, {0, 2})},
                         {1, 2, 0}};
    auto expanded = expand_witness(host, tri);
    REQUIRE(expanded.has_value());
    CHECK(verify_witness(host, *expanded));
}

TEST_CASE("expand_witness: precondition errors") {
    Hypergraph h = hg1(6, 3, {{1, 2, 5}, {2, 3, 6}});
    // Edge {3,4} is not a sub-edge of the host.
    CHECK_THROWS_AS(expand_witness(h, shadow_path({vs1(6, {2, 3}), vs1(6, {3, 4})})),
                    PreconditionError);
    // A berge witness is not a linear structure.
    StructureWitness berge{StructureKind(StructureFamily::berge_path, 1),
                           {vs1(6, {1, 2})},
                           {0, 1}};
    CHECK_THROWS_AS(expand_witness(h, berge), PreconditionError);
}

TEST_CASE("expand_witness on random dense hosts always verifies") {
    SplitMix64 rng(43);
    int expanded_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Hypergraph host = random_hypergraph(13, 3, 0.55, rng.next());
        Hypergraph sh = host.empty() ? Hypergraph(13, 2) : shadow(host, 1);
        SearchResult path =
            find_structure(sh, StructureKind(StructureFamily::linear_path, 3));
        if (path.status != SearchStatus::found) continue;
        auto expanded = expand_witness(host, *path.witness);
        if (expanded) {
            ++expanded_count;
            CHECK(verify_witness(host, *expanded));
            // Added vertices are distinct and outside the shadow witness.
            VertexSet shadow_support(13);
            for (const auto& e : path.witness->edges) shadow_support |= e;
            VertexSet added(13);
            for (std::size_t i = 0; i < expanded->edges.size(); ++i) {
                VertexSet extra = expanded->edges[i] - path.witness->edges[i];
                CHECK(extra.size() == 1);
                CHECK_FALSE(extra.intersects(shadow_support));
                CHECK_FALSE(extra.intersects(added));
                added |= extra;
            }
        }
    }
    CHECK(expanded_count > 50);
}

TEST_CASE("expand_long_path: collapsed two-color lists follow the doubling route") {
    // Eight pair edges, every list = {A, B} with A < B: the expected 4-path is
    // e0+A, e2+A, e3+B, e5+B.
    const int n = 11;  // path vertices 0..8, colors 9 (A) and 10 (B)
    Hypergraph host = path_host(n, 8, {9, 10});
    StructureWitness p = pair_path(n, 8);
    StructureWitness got = expand_long_path(host, p, 4);
    REQUIRE(got.edges.size() == 4);
    CHECK(got.edges[0] == VertexSet(n, {0, 1, 9}));
    CHECK(got.edges[1] == VertexSet(n, {2, 3, 9}));
    CHECK(got.edges[2] == VertexSet(n, {3, 4, 10}));
    CHECK(got.edges[3] == VertexSet(n, {5, 6, 10}));
    CHECK(verify_witness(host, got));
}

TEST_CASE("expand_long_path: plentiful disjoint lists") {
    // Each edge i gets its own pair of colors: SDR-style expansion succeeds.
    const int n = 9 + 16;
    std::vector<VertexSet> es;
    for (int i = 0; i < 8; ++i) {
        es.push_back(VertexSet(n, {i, i + 1, 9 + 2 * i}));
        es.push_back(VertexSet(n, {i, i + 1, 9 + 2 * i + 1}));
    }
    Hypergraph host(n, 3, es);
    StructureWitness got = expand_long_path(host, pair_path(n, 8), 4);
    CHECK(verify_witness(host, got));
    CHECK(got.edges[0].contains(0));
    CHECK(got.edges[0].contains(1));
}

TEST_CASE("expand_long_path: odd k truncates the even solution") {
    const int n = 11;
    Hypergraph host = path_host(n, 8, {9, 10});
    StructureWitness got = expand_long_path(host, pair_path(n, 8), 3);
    CHECK(got.kind.k == 3);
    CHECK(got.edges.size() == 3);
    CHECK(verify_witness(host, got));
    CHECK(got.edges[0].contains(0));
    CHECK(got.edges[0].contains(1));
}

TEST_CASE("expand_long_path: odd k=5 shares the 32-edge budget with k=6") {
    const int n = 33 + 3;
    std::vector<VertexSet> es;
    for (int i = 0; i < 32; ++i)
        for (int c : {33, 34, 35}) es.push_back(VertexSet(n, {i, i + 1, c}));
    Hypergraph host(n, 3, es);
    StructureWitness got = expand_long_path(host, pair_path(n, 32), 5);
    CHECK(got.kind.k == 5);
    CHECK(verify_witness(host, got));
    CHECK(got.edges[0].contains(0));
    CHECK(got.edges[0].contains(1));
}

TEST_CASE("expand_long_path: k=6 needs 32 edges and succeeds on random lists") {
    SplitMix64 rng(47);
    const int path_len = 32;
    const int n = 33 + 12;  // vertices 0..32 on the path, colors 33..44
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<VertexSet> es;
        for (int i = 0; i < path_len; ++i) {
            // three to five colors per edge, sizes >= l+1 = 3
            int count = 3 + static_cast<int>(rng.next() % 3);
            VertexSet seen(n);
            for (int c = 0; c < count; ++c) {
                int color = 33 + static_cast<int>(rng.next() % 12);
                if (seen.contains(color)) {
                    --c;
                    continue;
                }
                seen.add(color);
                es.push_back(VertexSet(n, {i, i + 1, color}));
            }
        }
        Hypergraph host(n, 3, es);
        StructureWitness got = expand_long_path(host, pair_path(n, path_len), 6);
        CHECK(verify_witness(host, got));
        CHECK(got.edges[0].contains(0));
    }
}

TEST_CASE("expand_long_path: small lists are a precondition error") {
    const int n = 11;
    Hypergraph host = path_host(n, 8, {9});  // lists of size 1 < l+1
    CHECK_THROWS_AS(expand_long_path(host, pair_path(n, 8), 4), PreconditionError);
    // Wrong path length.
    Hypergraph host2 = path_host(n, 6, {9, 10});
    CHECK_THROWS_AS(expand_long_path(host2, pair_path(n, 6), 4), PreconditionError);
}
