#pragma once

#include <string>

#include <gmpxx.h>

#include "turan/hypergraph.hpp"

namespace turan {

enum class ExtremalTarget { path, cycle, minimal_cycle };

const char* target_name(ExtremalTarget t);
std::optional<ExtremalTarget> target_from_name(const std::string& name);

enum class Validity {
    holds_for_large_n,        // proven above an unspecified threshold only
    known_small_n_threshold,  // proven for all n >= threshold_n
};

const char* validity_name(Validity v);

// Exact closed-form value. Arbitrary-precision so ratio checks at n in the
// thousands stay exact.
struct TuranValue {
    mpz_class value;
    Validity note;
    // Meaningful for known_small_n_threshold.
    long threshold_n = 0;

    std::string to_string() const { return value.get_str(); }
};

// Exact binomial coefficient; 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

// Parameters of one extremal family: the core set L of size floor((k-1)/2)
// plus, for even k, a small extra family outside L.
struct ConstructionSpec {
    int n;
    int r;
    int k;
    ExtremalTarget target;
    // Defaults to {0,...,l-1}; must have exactly floor((k-1)/2) members.
    std::optional<VertexSet> core;

    ConstructionSpec(int n_, int r_, int k_, ExtremalTarget target_,
                     std::optional<VertexSet> core_ = std::nullopt);

    int ell() const { return (k - 1) / 2; }
    VertexSet core_set() const;
};

// All r-subsets of [0,n) meeting L. Size is C(n,r) - C(n-|L|,r).
Hypergraph star_construction(int n, int r, const VertexSet& core);

enum class ExtraFamily {
    p2_and_2p1_free,  // all r-sets through one fixed pair: C(m-2, r-2) edges
    p2_free,          // r = 3 only: larger of pair-star and disjoint K_4^(3) packing
    matching,         // floor(m/r) pairwise disjoint edges
};

const char* extra_family_name(ExtraFamily v);

// The lower-order-term family on the first m vertices of an n-universe.
Hypergraph extra_family(int universe, int m, int r, ExtraFamily variant);

// Convenience form on exactly m vertices.
inline Hypergraph extra_family(int m, int r, ExtraFamily variant) {
    return extra_family(m, m, r, variant);
}

// The conjectured-extremal family for the given parameters: star on the core
// plus the appropriate extra family placed on the smallest vertices outside it.
Hypergraph extremal_candidate(const ConstructionSpec& spec);

// Closed-form Turán values for paths, cycles and minimal cycles, k >= 4.
TuranValue turan_value_formula(int n, int r, int k, ExtremalTarget target);

enum class LiteratureValue {
    minimal_triangle,         // C(n-1, r-1), n >= ceil(3r/2)
    linear_triangle_r3,       // C(n-1, 2), r = 3, n >= 6
    graph_path_upper_bound,   // floor((k-1) n / 2), graphs, upper bound for all n
};

const char* literature_value_name(LiteratureValue v);
std::optional<LiteratureValue> literature_value_from_name(const std::string& name);

// Cited exact values / bounds with their stated validity thresholds.
// `k` is only read by graph_path_upper_bound.
TuranValue literature_value(int n, int r, LiteratureValue kind, int k = 0);

// One tab-separated row: n, r, k, target, value, validity note.
std::string formula_tsv_row(int n, int r, int k, ExtremalTarget target);

}  // namespace turan
