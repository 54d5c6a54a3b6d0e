#include "turan/structures.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace turan {

const char* family_name(StructureFamily f) {
    switch (f) {
        case StructureFamily::linear_path: return "linear-path";
        case StructureFamily::linear_cycle: return "linear-cycle";
        case StructureFamily::minimal_path: return "minimal-path";
        case StructureFamily::minimal_cycle: return "minimal-cycle";
        case StructureFamily::berge_path: return "berge-path";
        case StructureFamily::berge_cycle: return "berge-cycle";
    }
    return "?";
}

std::optional<StructureFamily> family_from_name(const std::string& name) {
    for (StructureFamily f :
         {StructureFamily::linear_path, StructureFamily::linear_cycle,
          StructureFamily::minimal_path, StructureFamily::minimal_cycle,
          StructureFamily::berge_path, StructureFamily::berge_cycle})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

StructureKind::StructureKind(StructureFamily family_, int k_) : family(family_), k(k_) {
    int min_k = 1;
    if (family == StructureFamily::linear_cycle || family == StructureFamily::minimal_cycle)
        min_k = 3;
    else if (family == StructureFamily::berge_cycle)
        min_k = 2;
    if (k < min_k)
        throw ParameterError(std::string(family_name(family)) + " needs k >= " +
                             std::to_string(min_k) + ", got k = " + std::to_string(k));
}

const char* fault_name(WitnessFault f) {
    switch (f) {
        case WitnessFault::none: return "none";
        case WitnessFault::wrong_edge_count: return "wrong-edge-count";
        case WitnessFault::edge_not_in_host: return "edge-not-in-host";
        case WitnessFault::duplicate_edge: return "duplicate-edge";
        case WitnessFault::wrong_connector_count: return "wrong-connector-count";
        case WitnessFault::connector_outside_edges: return "connector-outside-edges";
        case WitnessFault::duplicate_connector: return "duplicate-connector";
        case WitnessFault::consecutive_intersection_wrong:
            return "consecutive-intersection-wrong";
        case WitnessFault::nonconsecutive_edges_intersect:
            return "nonconsecutive-edges-intersect";
        case WitnessFault::common_vertex_in_all_edges: return "common-vertex-in-all-edges";
    }
    return "?";
}

int min_witness_vertices(const StructureKind& kind, int r) {
    if (r < 1) throw ParameterError("uniformity must be >= 1");
    int k = kind.k;
    switch (kind.family) {
        case StructureFamily::linear_path: return k * (r - 1) + 1;
        case StructureFamily::linear_cycle: return k * (r - 1);
        case StructureFamily::minimal_path:
            return k % 2 == 0 ? k * r / 2 + 1 : r * (k + 1) / 2;
        case StructureFamily::minimal_cycle: return (k * r + 1) / 2;
        case StructureFamily::berge_path: return k + 1;
        case StructureFamily::berge_cycle: return k;
    }
    return 0;
}

namespace {

VerifyReport fail(WitnessFault f, int where = -1) { return {false, f, where}; }

int expected_connectors(const StructureKind& kind) {
    switch (kind.family) {
        case StructureFamily::linear_path:
        case StructureFamily::minimal_path: return kind.k - 1;
        case StructureFamily::berge_path: return kind.k + 1;
        default: return kind.k;  // the three cycle families
    }
}

}  // namespace

VerifyReport verify_witness_report(const Hypergraph& h, const StructureWitness& w) {
    const int k = w.kind.k;
    if (static_cast<int>(w.edges.size()) != k) return fail(WitnessFault::wrong_edge_count);
    for (int i = 0; i < k; ++i)
        if (!h.contains(w.edges[static_cast<std::size_t>(i)]))
            return fail(WitnessFault::edge_not_in_host, i);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (w.edges[static_cast<std::size_t>(i)] == w.edges[static_cast<std::size_t>(j)])
                return fail(WitnessFault::duplicate_edge, j);
    if (static_cast<int>(w.connectors.size()) != expected_connectors(w.kind))
        return fail(WitnessFault::wrong_connector_count);
    {
        std::vector<int> c = w.connectors;
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            return fail(WitnessFault::duplicate_connector);
    }
    auto edge = [&](int i) -> const VertexSet& {
        return w.edges[static_cast<std::size_t>(((i % k) + k) % k)];
    };

    const bool cyclic = is_cycle_family(w.kind.family);
    switch (w.kind.family) {
        case StructureFamily::linear_path:
        case StructureFamily::linear_cycle:
        case StructureFamily::minimal_path:
        case StructureFamily::minimal_cycle: {
            const bool linear = w.kind.family == StructureFamily::linear_path ||
                                w.kind.family == StructureFamily::linear_cycle;
            const int pairs = cyclic ? k : k - 1;
            for (int i = 0; i < pairs; ++i) {
                VertexSet inter = edge(i) & edge(i + 1);
                if (linear ? inter.size() != 1 : inter.empty())
                    return fail(WitnessFault::consecutive_intersection_wrong, i);
                int c = w.connectors[static_cast<std::size_t>(i)];
                if (c < 0 || c >= h.vertex_count() || !inter.contains(c))
                    return fail(WitnessFault::connector_outside_edges, i);
            }
            for (int i = 0; i < k; ++i)
                for (int j = i + 2; j < k; ++j) {
                    if (cyclic && i == 0 && j == k - 1) continue;  // consecutive around
                    if (edge(i).intersects(edge(j)))
                        return fail(WitnessFault::nonconsecutive_edges_intersect, j);
                }
            if (cyclic) {
                // Binds only at k = 3; larger k is covered by disjointness above.
                VertexSet common = edge(0);
                for (int i = 1; i < k; ++i) common &= edge(i);
                if (!common.empty())
                    return fail(WitnessFault::common_vertex_in_all_edges);
            }
            return {};
        }
        case StructureFamily::berge_cycle: {
            for (int i = 0; i < k; ++i) {
                int c = w.connectors[static_cast<std::size_t>(i)];
                if (c < 0 || c >= h.vertex_count() || !edge(i).contains(c) ||
                    !edge(i + 1).contains(c))
                    return fail(WitnessFault::connector_outside_edges, i);
            }
            return {};
        }
        case StructureFamily::berge_path: {
            // connectors[0] lives in the first edge, connectors[k] in the last,
            // connectors[i] in edges i-1 and i.
            for (int i = 0; i <= k; ++i) {
                int c = w.connectors[static_cast<std::size_t>(i)];
                if (c < 0 || c >= h.vertex_count())
                    return fail(WitnessFault::connector_outside_edges, i);
                bool ok = true;
                if (i > 0 && !edge(i - 1).contains(c)) ok = false;
                if (i < k && !edge(i).contains(c)) ok = false;
                if (!ok) return fail(WitnessFault::connector_outside_edges, i);
            }
            return {};
        }
    }
    return {};
}

bool verify_witness(const Hypergraph& h, const StructureWitness& w) {
    return verify_witness_report(h, w).ok;
}

namespace {

// Depth-first search over ordered edge sequences. Works in append-only mode;
// paths that must pass through a given edge are handled by growing one side,
// reversing the partial path, and growing the other.
class Searcher {
public:
    Searcher(const Hypergraph& h, const StructureKind& kind, std::uint64_t limit)
        : h_(h),
          kind_(kind),
          limit_(limit),
          k_(kind.k),
          berge_(kind.family == StructureFamily::berge_path ||
                 kind.family == StructureFamily::berge_cycle),
          linear_(kind.family == StructureFamily::linear_path ||
                  kind.family == StructureFamily::linear_cycle),
          cycle_(is_cycle_family(kind.family)),
          used_edge_(h.size(), 0),
          used_v_(h.vertex_count()),
          used_conn_(h.vertex_count()) {}

    SearchResult run_plain() {
        if (precheck_absent()) return {SearchStatus::absent, std::nullopt, 0};
        const int m = static_cast<int>(h_.size());
        for (int i = 0; i < m; ++i) {
            floor_ = cycle_ ? i : -1;
            place(i);
            bool hit = grow(k_ - 1, 0);
            unplace(i);
            if (hit) return {SearchStatus::found, std::move(found_), nodes_};
            if (limit_hit_) return {SearchStatus::unknown, std::nullopt, nodes_};
        }
        return {SearchStatus::absent, std::nullopt, nodes_};
    }

    SearchResult run_through(const VertexSet& e) {
        int idx = h_.index_of(e);
        if (idx < 0)
            throw ParameterError("edge " + e.to_string() + " is not in the host");
        if (precheck_absent()) return {SearchStatus::absent, std::nullopt, 0};
        floor_ = -1;
        if (cycle_) {
            place(idx);
            bool hit = grow(k_ - 1, 0);
            unplace(idx);
            if (hit) return {SearchStatus::found, std::move(found_), nodes_};
            return {limit_hit_ ? SearchStatus::unknown : SearchStatus::absent, std::nullopt,
                    nodes_};
        }
        // Path through e: grow `right` edges, reverse, grow `left` edges. Splits
        // with right < left are reversals of ones already tried.
        for (int left = 0; left <= (k_ - 1) / 2; ++left) {
            int right = k_ - 1 - left;
            place(idx);
            bool hit = grow(right, left);
            unplace(idx);
            if (hit) return {SearchStatus::found, std::move(found_), nodes_};
            if (limit_hit_) return {SearchStatus::unknown, std::nullopt, nodes_};
        }
        return {SearchStatus::absent, std::nullopt, nodes_};
    }

private:
    bool precheck_absent() const {
        return static_cast<int>(h_.size()) < k_ ||
               h_.vertex_count() < min_witness_vertices(kind_, h_.uniformity());
    }

    bool tick() {
        if (nodes_ >= limit_) {
            limit_hit_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    const VertexSet& E(int seq_pos) const {
        return h_.edge(static_cast<std::size_t>(seq_[static_cast<std::size_t>(seq_pos)]));
    }

    void place(int idx) {
        seq_.push_back(idx);
        used_edge_[static_cast<std::size_t>(idx)] = 1;
        saved_v_.push_back(used_v_);
        used_v_ |= h_.edge(static_cast<std::size_t>(idx));
    }

    void unplace(int idx) {
        seq_.pop_back();
        used_edge_[static_cast<std::size_t>(idx)] = 0;
        used_v_ = saved_v_.back();
        saved_v_.pop_back();
    }

    void reverse_state() {
        std::reverse(seq_.begin(), seq_.end());
        std::reverse(conn_.begin(), conn_.end());
    }

    // Append `remaining` more edges; after that, if `after_reverse` > 0, flip
    // the path and append that many on the other side. One call = one node.
    bool grow(int remaining, int after_reverse) {
        if (!tick()) return false;
        if (remaining == 0) {
            if (after_reverse > 0) {
                reverse_state();
                bool hit = grow(after_reverse, 0);
                reverse_state();
                return hit;
            }
            return complete();
        }
        const bool closing = cycle_ && remaining == 1;
        const int m = static_cast<int>(h_.size());
        for (int cand = 0; cand < m; ++cand) {
            if (used_edge_[static_cast<std::size_t>(cand)]) continue;
            if (cand <= floor_) continue;  // cycles: rotate so the first edge is minimal
            const VertexSet& x = h_.edge(static_cast<std::size_t>(cand));
            if (berge_) {
                if (try_berge(cand, x, remaining, after_reverse, closing)) return true;
            } else {
                if (closing ? try_close_tight(cand, x) :
                              try_extend_tight(cand, x, remaining, after_reverse))
                    return true;
            }
            if (limit_hit_) return false;
        }
        return false;
    }

    // Linear/minimal append step.
    bool try_extend_tight(int cand, const VertexSet& x, int remaining, int after_reverse) {
        const VertexSet& end = E(static_cast<int>(seq_.size()) - 1);
        VertexSet allowed = end;
        if (seq_.size() >= 2) allowed -= E(static_cast<int>(seq_.size()) - 2);
        VertexSet touch = x & used_v_;
        if (touch.empty() || !touch.subset_of(allowed)) return false;
        if (linear_ && touch.size() != 1) return false;
        place(cand);
        bool hit = grow(remaining - 1, after_reverse);
        unplace(cand);
        return hit;
    }

    // Last edge of a linear/minimal cycle: must meet the first and the current
    // end exactly as the pattern demands and nothing else.
    bool try_close_tight(int cand, const VertexSet& x) {
        const VertexSet& first = E(0);
        const VertexSet& second = E(1);
        const VertexSet& end = E(k_ - 2);
        const VertexSet& before_end = E(k_ - 3 >= 0 ? k_ - 3 : 0);
        VertexSet a = x & first;
        VertexSet b = x & end;
        if (a.empty() || b.empty()) return false;
        if (linear_ && (a.size() != 1 || b.size() != 1)) return false;
        if (a.intersects(second)) return false;
        if (k_ >= 4 && b.intersects(before_end)) return false;
        if (k_ == 3 && b.intersects(first)) return false;
        VertexSet middle = used_v_ - first - end;
        if (x.intersects(middle)) return false;
        if (cycle_reflection_pruned(cand)) return false;
        place(cand);
        bool hit = complete();
        unplace(cand);
        return hit;
    }

    bool cycle_reflection_pruned(int last_idx) const {
        // The reversed orientation is also explored; keep the one with the
        // smaller second edge. Only for k >= 3 (k = 2 has no second choice).
        return k_ >= 3 && seq_[1] > last_idx;
    }

    // Berge kinds: an appended edge also fixes a fresh connector with the
    // previous end edge; closing a berge cycle fixes two.
    bool try_berge(int cand, const VertexSet& x, int remaining, int after_reverse,
                   bool closing) {
        const VertexSet& end = E(static_cast<int>(seq_.size()) - 1);
        VertexSet options = (x & end) - used_conn_;
        for (int c = options.first(); c >= 0; c = options.next(c)) {
            used_conn_.add(c);
            conn_.push_back(c);
            place(cand);
            bool hit = false;
            if (closing) {
                if (!cycle_reflection_pruned(cand)) {
                    VertexSet closers = (x & E(0)) - used_conn_;
                    for (int c2 = closers.first(); c2 >= 0; c2 = closers.next(c2)) {
                        used_conn_.add(c2);
                        conn_.push_back(c2);
                        hit = complete();
                        conn_.pop_back();
                        used_conn_.remove(c2);
                        if (hit) break;
                    }
                }
            } else {
                hit = grow(remaining - 1, after_reverse);
            }
            unplace(cand);
            conn_.pop_back();
            used_conn_.remove(c);
            if (hit) return true;
            if (limit_hit_) return false;
        }
        return false;
    }

    bool complete() {
        StructureWitness w{kind_, {}, {}};
        w.edges.reserve(static_cast<std::size_t>(k_));
        for (int idx : seq_) w.edges.push_back(h_.edge(static_cast<std::size_t>(idx)));
        switch (kind_.family) {
            case StructureFamily::linear_path:
            case StructureFamily::minimal_path:
                for (int i = 0; i + 1 < k_; ++i)
                    w.connectors.push_back((w.edges[static_cast<std::size_t>(i)] &
                                            w.edges[static_cast<std::size_t>(i + 1)])
                                               .first());
                break;
            case StructureFamily::linear_cycle:
            case StructureFamily::minimal_cycle:
                for (int i = 0; i < k_; ++i)
                    w.connectors.push_back(
                        (w.edges[static_cast<std::size_t>(i)] &
                         w.edges[static_cast<std::size_t>((i + 1) % k_)])
                            .first());
                break;
            case StructureFamily::berge_cycle:
                w.connectors = conn_;
                break;
            case StructureFamily::berge_path: {
                // Free ends: one fresh vertex in the first edge, one in the last,
                // distinct from each other and from every inner connector.
                VertexSet left = w.edges.front() - used_conn_;
                VertexSet right = w.edges.back() - used_conn_;
                for (int v0 = left.first(); v0 >= 0; v0 = left.next(v0)) {
                    for (int vk = right.first(); vk >= 0; vk = right.next(vk)) {
                        if (v0 == vk) continue;
                        w.connectors.clear();
                        w.connectors.push_back(v0);
                        for (int c : conn_) w.connectors.push_back(c);
                        w.connectors.push_back(vk);
                        TURAN_ENSURE(verify_witness(h_, w));
                        found_ = w;
                        return true;
                    }
                }
                return false;
            }
        }
        TURAN_ENSURE(verify_witness(h_, w));
        found_ = std::move(w);
        return true;
    }

    const Hypergraph& h_;
    StructureKind kind_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    bool limit_hit_ = false;
    int k_;
    bool berge_, linear_, cycle_;
    int floor_ = -1;
    std::vector<char> used_edge_;
    std::vector<int> seq_;
    std::vector<int> conn_;
    std::vector<VertexSet> saved_v_;
    VertexSet used_v_;
    VertexSet used_conn_;
    std::optional<StructureWitness> found_;
};

}  // namespace

SearchResult find_structure(const Hypergraph& h, const StructureKind& kind,
                            std::uint64_t node_limit) {
    return Searcher(h, kind, node_limit).run_plain();
}

SearchResult find_structure_using_edge(const Hypergraph& h, const StructureKind& kind,
                                       const VertexSet& e, std::uint64_t node_limit) {
    return Searcher(h, kind, node_limit).run_through(e);
}

std::string witness_to_json(const StructureWitness& w, bool verified) {
    nlohmann::json j;
    j["kind"] = family_name(w.kind.family);
    j["k"] = w.kind.k;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const VertexSet& e : w.edges) {
        nlohmann::json one = nlohmann::json::array();
        for (int v = e.first(); v >= 0; v = e.next(v)) one.push_back(v + 1);
        edges.push_back(std::move(one));
    }
    auto& conn = j["connectors"] = nlohmann::json::array();
    for (int c : w.connectors) conn.push_back(c + 1);
    j["verified"] = verified;
    return j.dump();
}

StructureWitness witness_from_json(const std::string& json_text, int vertex_count) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(0, std::string("witness JSON: ") + e.what());
    }
    if (!j.contains("kind") || !j.contains("k") || !j.contains("edges") ||
        !j.contains("connectors"))
        throw ParseError(0, "witness JSON must have kind, k, edges, connectors");
    auto fam = family_from_name(j["kind"].get<std::string>());
    if (!fam) throw ParseError(0, "unknown kind \"" + j["kind"].get<std::string>() + "\"");
    StructureWitness w{StructureKind(*fam, j["k"].get<int>()), {}, {}};
    for (const auto& arr : j["edges"]) {
        VertexSet e(vertex_count);
        for (const auto& v : arr) {
            long val = v.get<long>();
            if (val < 1 || val > vertex_count)
                throw ParseError(0, "witness vertex " + std::to_string(val) +
                                        " outside [1," + std::to_string(vertex_count) + "]");
            e.add(static_cast<int>(val - 1));
        }
        w.edges.push_back(e);
    }
    for (const auto& v : j["connectors"]) {
        long val = v.get<long>();
        if (val < 1 || val > vertex_count)
            throw ParseError(0, "witness connector " + std::to_string(val) + " out of range");
        w.connectors.push_back(static_cast<int>(val - 1));
    }
    return w;
}

}  // namespace turan
