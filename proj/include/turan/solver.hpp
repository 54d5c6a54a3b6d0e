#pragma once

#include <cstdint>

#include "turan/constructions.hpp"
#include "turan/structures.hpp"

namespace turan {

// Exact Turán search: maximize edges of an n-vertex r-graph avoiding every
// witness of `forbidden`, by branch and bound over the C(n,r) candidate edges
// in their natural order.
struct SolveConfig {
    int n;
    int r;
    StructureKind forbidden;
    std::uint64_t node_limit = 0;    // 0 = unlimited
    double time_limit_seconds = 0;   // 0 = unlimited
    bool deterministic = true;       // forces a single worker
    int workers = 1;
    // Off by default: restricts the search to families whose first edge (if
    // any) is {0..r-1}; sound for the optimum value because the forbidden
    // families are isomorphism-invariant, and only for the value.
    bool symmetry_break = false;

    SolveConfig(int n_, int r_, StructureKind forbidden_)
        : n(n_), r(r_), forbidden(forbidden_) {}
};

enum class SolveStatus { optimal, bounds_only };

struct SolveResult {
    SolveStatus status;
    long lower_bound = 0;
    long upper_bound = 0;
    Hypergraph witness_family;
    std::uint64_t nodes_explored = 0;
};

// A verified forbidden-free family used as the initial incumbent: the closed
// form construction when the parameters match one, else lexicographic greedy.
Hypergraph greedy_lower_bound(const SolveConfig& cfg);

SolveResult solve_exact(const SolveConfig& cfg);

// Solver vs closed form. Below the embeddability threshold the formula row is
// marked not applicable and disagreement is expected data.
struct CompareReport {
    SolveStatus solver_status;
    long solver_lower = 0;
    long solver_upper = 0;
    std::uint64_t nodes = 0;
    mpz_class formula_value;
    Validity validity;
    long threshold_n = 0;
    bool applicable = true;  // n >= minimum vertices of the forbidden structure
    std::optional<bool> agree;  // present when the solver proved optimality
};

CompareReport compare_with_formula(int n, int r, int k, ExtremalTarget target,
                                   const SolveConfig& limits);

// The detection class forbidden by each closed-form target.
StructureKind forbidden_kind_for_target(ExtremalTarget target, int k);

}  // namespace turan
