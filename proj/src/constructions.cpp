#include "turan/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace turan {

const char* target_name(ExtremalTarget t) {
    switch (t) {
        case ExtremalTarget::path: return "path";
        case ExtremalTarget::cycle: return "cycle";
        case ExtremalTarget::minimal_cycle: return "minimal-cycle";
    }
    return "?";
}

std::optional<ExtremalTarget> target_from_name(const std::string& name) {
    for (ExtremalTarget t :
         {ExtremalTarget::path, ExtremalTarget::cycle, ExtremalTarget::minimal_cycle})
        if (name == target_name(t)) return t;
    return std::nullopt;
}

const char* validity_name(Validity v) {
    return v == Validity::holds_for_large_n ? "holds-for-large-n"
                                            : "known-small-n-threshold";
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

ConstructionSpec::ConstructionSpec(int n_, int r_, int k_, ExtremalTarget target_,
                                   std::optional<VertexSet> core_)
    : n(n_), r(r_), k(k_), target(target_), core(std::move(core_)) {
    if (r < 3) throw ParameterError("constructions need r >= 3");
    int min_k = target == ExtremalTarget::path ? 4 : 3;
    if (k < min_k)
        throw ParameterError(std::string(target_name(target)) + " construction needs k >= " +
                             std::to_string(min_k));
    if (n < r + ell())
        throw ParameterError("n = " + std::to_string(n) +
                             " too small: the star core plus one edge needs " +
                             std::to_string(r + ell()) + " vertices");
    if (core) {
        if (core->size() != ell())
            throw ParameterError("core set must have floor((k-1)/2) = " +
                                 std::to_string(ell()) + " vertices");
        for (int v = core->first(); v >= 0; v = core->next(v))
            if (v >= n)
                throw ParameterError("core vertex " + std::to_string(v) + " outside [n]");
    }
}

VertexSet ConstructionSpec::core_set() const {
    if (core) {
        VertexSet c(n);
        for (int v = core->first(); v >= 0; v = core->next(v)) c.add(v);
        return c;
    }
    VertexSet c(n);
    for (int v = 0; v < ell(); ++v) c.add(v);
    return c;
}

Hypergraph star_construction(int n, int r, const VertexSet& core) {
    if (core.empty()) throw ParameterError("star core must be non-empty");
    if (r > n) throw ParameterError("star construction needs r <= n");
    for (int v = core.first(); v >= 0; v = core.next(v))
        if (v >= n) throw ParameterError("core vertex " + std::to_string(v) + " outside [n]");
    std::vector<VertexSet> edges;
    for_each_subset(n, r, [&](const VertexSet& e) {
        if (e.intersects(core)) edges.push_back(e);
    });
    return Hypergraph(n, r, std::move(edges));
}

const char* extra_family_name(ExtraFamily v) {
    switch (v) {
        case ExtraFamily::p2_and_2p1_free: return "P2-and-2P1-free";
        case ExtraFamily::p2_free: return "P2-free";
        case ExtraFamily::matching: return "matching";
    }
    return "?";
}

Hypergraph extra_family(int universe, int m, int r, ExtraFamily variant) {
    if (m < r)
        throw ParameterError("extra family needs m >= r, got m = " + std::to_string(m));
    if (m > universe) throw ParameterError("extra family does not fit the universe");
    std::vector<VertexSet> edges;
    switch (variant) {
        case ExtraFamily::p2_and_2p1_free: {
            // Every r-set through the pair {0,1}: no single-vertex intersections,
            // no two disjoint edges.
            for_each_subset(m, r, [&](const VertexSet& e) {
                if (e.contains(0) && e.contains(1)) {
                    VertexSet lifted(universe);
                    for (int v = e.first(); v >= 0; v = e.next(v)) lifted.add(v);
                    edges.push_back(lifted);
                }
            });
            break;
        }
        case ExtraFamily::p2_free: {
            if (r != 3)
                throw ParameterError(
                    "the P2-free extra family is only available for r = 3");
            long star = m - 2;
            long packing = 4L * (m / 4);
            if (packing >= star) {
                // Ties go to the packing.
                for (int g = 0; g + 4 <= m; g += 4)
                    for_each_subset(4, 3, [&](const VertexSet& t) {
                        VertexSet e(universe);
                        for (int v = t.first(); v >= 0; v = t.next(v)) e.add(g + v);
                        edges.push_back(e);
                    });
            } else {
                for (int v = 2; v < m; ++v)
                    edges.push_back(VertexSet(universe, {0, 1, v}));
            }
            break;
        }
        case ExtraFamily::matching: {
            for (int g = 0; g + r <= m; g += r) {
                VertexSet e(universe);
                for (int v = 0; v < r; ++v) e.add(g + v);
                edges.push_back(e);
            }
            break;
        }
    }
    return Hypergraph(universe, r, std::move(edges));
}

namespace {

// Relabel an extra family built on {0..m-1} onto the vertices outside the core,
// smallest labels first.
Hypergraph shift_outside_core(const Hypergraph& fam, int n, const VertexSet& core) {
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
        if (!core.contains(v)) outside.push_back(v);
    std::vector<VertexSet> edges;
    for (const VertexSet& e : fam.edges()) {
        VertexSet lifted(n);
        for (int v = e.first(); v >= 0; v = e.next(v))
            lifted.add(outside[static_cast<std::size_t>(v)]);
        edges.push_back(lifted);
    }
    return Hypergraph(n, fam.uniformity(), std::move(edges));
}

}  // namespace

Hypergraph extremal_candidate(const ConstructionSpec& spec) {
    const int n = spec.n, r = spec.r, k = spec.k;
    const VertexSet core = spec.core_set();
    Hypergraph star = star_construction(n, r, core);
    const int m = n - spec.ell();

    std::optional<Hypergraph> extra;
    if (k % 2 == 0) {
        switch (spec.target) {
            case ExtremalTarget::path:
                extra = extra_family(m, m, r, ExtraFamily::p2_and_2p1_free);
                break;
            case ExtremalTarget::cycle:
                extra = (k == 4 && r == 3)
                            ? extra_family(m, m, r, ExtraFamily::p2_free)
                            : extra_family(m, m, r, ExtraFamily::p2_and_2p1_free);
                break;
            case ExtremalTarget::minimal_cycle:
                if (k == 4) {
                    extra = extra_family(m, m, r, ExtraFamily::matching);
                } else {
                    // A single extra edge.
                    VertexSet e(m);
                    for (int v = 0; v < r; ++v) e.add(v);
                    extra = Hypergraph(m, r, {e});
                }
                break;
        }
    }

    if (!extra) return star;
    Hypergraph placed = shift_outside_core(*extra, n, core);
    std::vector<VertexSet> edges = star.edges();
    for (const VertexSet& e : placed.edges()) edges.push_back(e);
    return Hypergraph(n, r, std::move(edges));
}

TuranValue turan_value_formula(int n, int r, int k, ExtremalTarget target) {
    if (r < 3)
        throw ParameterError("no closed form for r < 3; nearest covered case is r = 3");
    if (k < 4)
        throw ParameterError("no closed form for " + std::string(target_name(target)) +
                             " with k = " + std::to_string(k) +
                             "; nearest covered cases are k = 4 displays or the k = 3 "
                             "literature values");
    if (n < r) throw ParameterError("need n >= r");
    const long ell = (k - 1) / 2;
    TuranValue out;
    out.note = Validity::holds_for_large_n;
    if (target == ExtremalTarget::minimal_cycle) {
        if (k == 4) {
            out.value = binomial(n, r) - binomial(n - 1, r) + (n - 1) / r;
        } else {
            out.value = binomial(n, r) - binomial(n - ell, r) + (k % 2 == 0 ? 1 : 0);
        }
        return out;
    }
    if (target == ExtremalTarget::cycle && k == 4 && r == 3) {
        long a = n - 3;
        long b = 4L * ((n - 1) / 4);
        out.value = binomial(n, 3) - binomial(n - 1, 3) + std::max(a, b);
        return out;
    }
    out.value = binomial(n, r) - binomial(n - ell, r);
    if (k % 2 == 0) out.value += binomial(n - ell - 2, r - 2);
    return out;
}

const char* literature_value_name(LiteratureValue v) {
    switch (v) {
        case LiteratureValue::minimal_triangle: return "minimal-triangle";
        case LiteratureValue::linear_triangle_r3: return "linear-triangle-r3";
        case LiteratureValue::graph_path_upper_bound: return "graph-path-upper-bound";
    }
    return "?";
}

std::optional<LiteratureValue> literature_value_from_name(const std::string& name) {
    for (LiteratureValue v :
         {LiteratureValue::minimal_triangle, LiteratureValue::linear_triangle_r3,
          LiteratureValue::graph_path_upper_bound})
        if (name == literature_value_name(v)) return v;
    return std::nullopt;
}

TuranValue literature_value(int n, int r, LiteratureValue kind, int k) {
    TuranValue out;
    out.note = Validity::known_small_n_threshold;
    switch (kind) {
        case LiteratureValue::minimal_triangle:
            if (r < 3) throw ParameterError("minimal-triangle value needs r >= 3");
            out.value = binomial(n - 1, r - 1);
            out.threshold_n = (3L * r + 1) / 2;  // n >= 3r/2
            return out;
        case LiteratureValue::linear_triangle_r3:
            if (r != 3) throw ParameterError("linear-triangle value is cited for r = 3 only");
            out.value = binomial(n - 1, 2);
            out.threshold_n = 6;
            return out;
        case LiteratureValue::graph_path_upper_bound:
            if (r != 2) throw ParameterError("the path bound is about graphs (r = 2)");
            if (k < 1) throw ParameterError("the path bound needs k >= 1");
            out.value = mpz_class(k - 1) * n / 2;
            out.threshold_n = 1;  // holds for every n
            return out;
    }
    throw ParameterError("unsupported literature value");
}

std::string formula_tsv_row(int n, int r, int k, ExtremalTarget target) {
    TuranValue v = turan_value_formula(n, r, k, target);
    std::ostringstream os;
    os << n << '\t' << r << '\t' << k << '\t' << target_name(target) << '\t'
       << v.to_string() << '\t' << validity_name(v.note);
    return os.str();
}

}  // namespace turan
