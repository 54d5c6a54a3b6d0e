#include <doctest.h>

#include "test_support.hpp"
#include "turan/hypergraph.hpp"
#include "turan/rng.hpp"

using namespace turan;
using testsupport::hg1;
using testsupport::vs1;

TEST_CASE("vertex set basics") {
    VertexSet s(10, {1, 4, 9});
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(2));
    CHECK(s.first() == 1);
    CHECK(s.next(1) == 4);
    CHECK(s.next(9) == -1);
    CHECK_THROWS_AS(s.contains(10), ParameterError);
    CHECK_THROWS_AS(VertexSet(200), ParameterError);

    VertexSet t(10, {4, 5});
    CHECK((s & t) == VertexSet(10, {4}));
    CHECK((s | t).size() == 4);
    CHECK((s - t) == VertexSet(10, {1, 9}));
    CHECK(s.intersection_size(t) == 1);
    CHECK(VertexSet(10, {3}).subset_of(VertexSet(10, {1, 3})));
}

TEST_CASE("vertex set order matches ascending member lists") {
    // {1,4} < {2,3} and {2,3} < {2,4}, exactly as the sorted lists compare.
    CHECK(VertexSet(5, {0, 3}).lex_less(VertexSet(5, {1, 2})));
    CHECK(VertexSet(5, {1, 2}).lex_less(VertexSet(5, {1, 3})));
    CHECK_FALSE(VertexSet(5, {1, 3}).lex_less(VertexSet(5, {1, 3})));
    // A set is smaller than any proper superset sharing its smallest members.
    CHECK(VertexSet(5, {0, 1}).lex_less(VertexSet(5, {0, 1, 2})));
}

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS(Hypergraph(4, 3, {vs1(4, {1, 2}), vs1(4, {1, 2, 3})}), ParameterError);
    CHECK_THROWS_AS(Hypergraph(4, 3, {vs1(4, {1, 2, 3}), vs1(4, {1, 2, 3})}),
                    ParameterError);
    Hypergraph h = hg1(5, 3, {{3, 4, 5}, {1, 2, 3}});
    CHECK(h.size() == 2);
    CHECK(h.edge(0) == vs1(5, {1, 2, 3}));  // sorted on construction
    CHECK(h.contains(vs1(5, {3, 4, 5})));
    CHECK(h.index_of(vs1(5, {1, 2, 4})) == -1);
}

TEST_CASE("shadow: definition cases") {
    Hypergraph h = hg1(5, 3, {{1, 2, 3}, {3, 4, 5}});
    Hypergraph s = shadow(h, 1);
    CHECK(s.uniformity() == 2);
    CHECK(s.size() == 6);
    for (auto e : {vs1(5, {1, 2}), vs1(5, {1, 3}), vs1(5, {2, 3}), vs1(5, {3, 4}),
                   vs1(5, {3, 5}), vs1(5, {4, 5})})
        CHECK(s.contains(e));

    Hypergraph one = hg1(3, 3, {{1, 2, 3}});
    Hypergraph points = shadow(one, 2);
    CHECK(points.uniformity() == 1);
    CHECK(points.size() == 3);

    CHECK(shadow(Hypergraph(5, 3), 1).empty());
    CHECK_THROWS_AS(shadow(h, 3), ParameterError);
    CHECK_THROWS_AS(shadow(h, 0), ParameterError);
}

TEST_CASE("codegree and neighborhood") {
    Hypergraph k5 = complete_hypergraph(5, 3);
    CHECK(codegree(k5, vs1(5, {1, 2})) == 3);
    CHECK(neighborhood(k5, vs1(5, {1, 2})) == vs1(5, {3, 4, 5}));

    Hypergraph h = hg1(5, 3, {{1, 2, 3}, {3, 4, 5}});
    CHECK(codegree(h, vs1(5, {3, 4})) == 1);
    CHECK(codegree(h, vs1(5, {1, 4})) == 0);
    CHECK(codegree(h, vs1(5, {1, 2, 3})) == 1);
    CHECK_THROWS_AS(codegree(h, vs1(5, {1, 2, 3, 4})), ParameterError);
    CHECK_THROWS_AS(neighborhood(h, vs1(5, {1})), ParameterError);
}

TEST_CASE("remove_vertices") {
    Hypergraph h = hg1(5, 3, {{1, 2, 3}, {3, 4, 5}});
    CHECK(remove_vertices(h, vs1(5, {5})) == hg1(5, 3, {{1, 2, 3}}));
    CHECK(remove_vertices(h, VertexSet(5)) == h);
    CHECK(remove_vertices(hg1(3, 3, {{1, 2, 3}}), vs1(3, {1})).empty());
}

TEST_CASE("remove_vertices composes over unions") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph h = random_hypergraph(9, 3, 0.4, rng.next());
        VertexSet x(9), y(9);
        for (int v = 0; v < 9; ++v) {
            if (rng.next_bit()) x.add(v);
            if (rng.next_bit()) y.add(v);
        }
        CHECK(remove_vertices(h, x | y) == remove_vertices(remove_vertices(h, x), y));
    }
}

TEST_CASE("fullness") {
    FullnessReport full = fullness(complete_hypergraph(5, 3), 3);
    CHECK(full.is_full);
    CHECK(full.min_nonzero_codegree == 3);

    FullnessReport sparse = fullness(hg1(5, 3, {{1, 2, 3}, {3, 4, 5}}), 2);
    CHECK_FALSE(sparse.is_full);
    REQUIRE(sparse.violating_subedge.has_value());
    CHECK(sparse.violating_subedge->size() == 2);
    CHECK(codegree(hg1(5, 3, {{1, 2, 3}, {3, 4, 5}}), *sparse.violating_subedge) < 2);

    CHECK(fullness(Hypergraph(6, 3), 100).is_full);  // vacuous
    CHECK_THROWS_AS(fullness(Hypergraph(6, 3), 0), ParameterError);
}

TEST_CASE("fullness is monotone in d") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        Hypergraph h = random_hypergraph(8, 3, 0.5, rng.next());
        for (int d = 2; d <= 4; ++d)
            if (is_full(h, d)) CHECK(is_full(h, d - 1));
    }
}

TEST_CASE("superfullness") {
    CHECK(is_superfull(complete_hypergraph(12, 3), 3, 9));
    CHECK_FALSE(is_superfull(complete_hypergraph(5, 3), 3, 9));
    CHECK(is_superfull(Hypergraph(5, 3), 1, 9));
    // Precondition names a violating sub-edge.
    CHECK_THROWS_AS(is_superfull(hg1(5, 3, {{1, 2, 3}, {3, 4, 5}}), 2, 9),
                    PreconditionError);
}

TEST_CASE("sparseness") {
    Hypergraph h = hg1(5, 3, {{1, 2, 3}, {3, 4, 5}});
    CHECK(is_sparse(h, 2, 1));
    CHECK_FALSE(is_sparse(complete_hypergraph(5, 3), 2, 1));
    CHECK(is_sparse(complete_hypergraph(5, 3), 3, 1));  // no duplicate edges
    CHECK(is_sparse(complete_hypergraph(6, 3), 2, 4));
    CHECK_FALSE(is_sparse(complete_hypergraph(6, 3), 2, 3));
    CHECK_THROWS_AS(is_sparse(h, 0, 1), ParameterError);
    CHECK_THROWS_AS(is_sparse(h, 4, 1), ParameterError);
}

TEST_CASE("generators") {
    CHECK(complete_hypergraph(5, 3).size() == 10);
    CHECK(complete_hypergraph(6, 3).size() == 20);
    CHECK(random_hypergraph(6, 3, 0.0, 1).empty());
    CHECK(random_hypergraph(6, 3, 1.0, 1) == complete_hypergraph(6, 3));
    CHECK(random_hypergraph(10, 3, 0.5, 42) == random_hypergraph(10, 3, 0.5, 42));
    CHECK_THROWS_AS(complete_hypergraph(2, 3), ParameterError);
    CHECK_THROWS_AS(random_hypergraph(6, 3, 1.5, 1), ParameterError);
}

TEST_CASE("shadow composes: shadow(shadow(H,a),b) == shadow(H,a+b)") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph h = random_hypergraph(9, 4, 0.3, rng.next());
        CHECK(shadow(shadow(h, 1), 1) == shadow(h, 2));
        CHECK(shadow(shadow(h, 2), 1) == shadow(h, 3));
        CHECK(shadow(shadow(h, 1), 2) == shadow(h, 3));
    }
}

TEST_CASE("shadow size bound with equality iff (r-1)-linear") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph h = random_hypergraph(10, 3, 0.15, rng.next());
        std::size_t bound = 3 * h.size();
        Hypergraph sh = shadow(h, 1);
        if (h.empty()) continue;
        CHECK(sh.size() <= bound);
        CHECK((sh.size() == bound) == is_sparse(h, 2, 1));
    }
}

TEST_CASE("neighborhood matches codegree on (r-1)-sets and avoids S") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph h = random_hypergraph(9, 3, 0.4, rng.next());
        for_each_subset(9, 2, [&](const VertexSet& s) {
            VertexSet nb = neighborhood(h, s);
            CHECK(nb.size() == codegree(h, s));
            CHECK((nb & s).empty());
        });
    }
}
