#include "turan/solver.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

namespace turan {

namespace {

std::vector<VertexSet> all_candidates(int n, int r) {
    std::vector<VertexSet> out;
    if (r <= n) for_each_subset(n, r, [&](const VertexSet& e) { out.push_back(e); });
    return out;
}

bool construction_applies(const SolveConfig& cfg) {
    if (cfg.r < 3) return false;
    switch (cfg.forbidden.family) {
        case StructureFamily::linear_path: return cfg.forbidden.k >= 4;
        case StructureFamily::linear_cycle:
        case StructureFamily::minimal_cycle: return cfg.forbidden.k >= 3;
        default: return false;
    }
}

ExtremalTarget target_of(const StructureKind& kind) {
    switch (kind.family) {
        case StructureFamily::linear_path: return ExtremalTarget::path;
        case StructureFamily::linear_cycle: return ExtremalTarget::cycle;
        default: return ExtremalTarget::minimal_cycle;
    }
}

}  // namespace

Hypergraph greedy_lower_bound(const SolveConfig& cfg) {
    if (cfg.n < cfg.r) return Hypergraph(cfg.n, cfg.r);
    if (construction_applies(cfg)) {
        try {
            ConstructionSpec spec(cfg.n, cfg.r, cfg.forbidden.k, target_of(cfg.forbidden));
            Hypergraph cand = extremal_candidate(spec);
            if (find_structure(cand, cfg.forbidden).status == SearchStatus::absent)
                return cand;
        } catch (const ParameterError&) {
            // n too small for the construction; fall through to greedy
        }
    }
    std::vector<VertexSet> family;
    for (const VertexSet& c : all_candidates(cfg.n, cfg.r)) {
        family.push_back(c);
        Hypergraph trial(cfg.n, cfg.r, family);
        if (find_structure_using_edge(trial, cfg.forbidden, c).status !=
            SearchStatus::absent)
            family.pop_back();
    }
    Hypergraph out(cfg.n, cfg.r, std::move(family));
    TURAN_ENSURE(find_structure(out, cfg.forbidden).status == SearchStatus::absent);
    return out;
}

namespace {

// Shared search state. The incumbent only improves, so the final optimum is
// independent of worker scheduling; node counts and the witness are pinned
// down only in single-worker (deterministic) runs.
struct SharedState {
    const SolveConfig& cfg;
    const std::vector<VertexSet>& candidates;

    std::mutex best_mu;
    long best;
    std::vector<VertexSet> best_family;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};      // a resource limit tripped
    std::atomic<bool> degraded{false};  // a detector hit its own limit

    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;

    std::mutex queue_mu;
    std::condition_variable queue_cv;
    struct Task {
        std::vector<VertexSet> family;
        int next;
    };
    std::deque<Task> queue;
    int outstanding = 0;  // queued + running tasks

    SharedState(const SolveConfig& c, const std::vector<VertexSet>& cand, long seed_best,
                std::vector<VertexSet> seed_family)
        : cfg(c), candidates(cand), best(seed_best), best_family(std::move(seed_family)) {
        if (cfg.time_limit_seconds > 0) {
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(cfg.time_limit_seconds));
            has_deadline = true;
        }
    }

    long read_best() {
        std::lock_guard<std::mutex> lk(best_mu);
        return best;
    }

    void offer(long count, const std::vector<VertexSet>& family) {
        std::lock_guard<std::mutex> lk(best_mu);
        if (count > best) {
            best = count;
            best_family = family;
        }
    }

    bool over_limits() {
        std::uint64_t seen = nodes.load(std::memory_order_relaxed);
        if (cfg.node_limit > 0 && seen > cfg.node_limit) return true;
        if (has_deadline && (seen & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            return true;
        return false;
    }
};

class Worker {
public:
    Worker(SharedState& st, bool allow_spawn) : st_(st), spawn_(allow_spawn) {}

    void run_task(std::vector<VertexSet> family, int next) {
        family_ = std::move(family);
        dfs(next);
    }

private:
    // Depth-first over include/exclude of candidate `idx`, include first.
    void dfs(int idx) {
        st_.nodes.fetch_add(1, std::memory_order_relaxed);
        if (st_.stop.load(std::memory_order_relaxed)) return;
        if (st_.over_limits()) {
            st_.stop.store(true);
            return;
        }
        const int total = static_cast<int>(st_.candidates.size());
        long count = static_cast<long>(family_.size());
        if (count > st_.read_best()) st_.offer(count, family_);
        if (idx == total) return;
        if (count + (total - idx) <= st_.read_best()) return;  // cannot beat incumbent

        const VertexSet& cand = st_.candidates[static_cast<std::size_t>(idx)];
        // Include branch: sound exactly when no forbidden structure runs
        // through the new edge.
        family_.push_back(cand);
        Hypergraph trial(st_.cfg.n, st_.cfg.r, family_);
        SearchResult det = find_structure_using_edge(trial, st_.cfg.forbidden, cand);
        if (det.status == SearchStatus::absent) {
            dfs(idx + 1);
        } else if (det.status == SearchStatus::unknown) {
            st_.degraded.store(true);  // skip: lower bound stays sound
        }
        family_.pop_back();
        if (st_.stop.load(std::memory_order_relaxed)) return;

        // Exclude branch; with spare workers, hand it off instead of recursing.
        if (spawn_ && idx < kSpawnDepth) {
            std::lock_guard<std::mutex> lk(st_.queue_mu);
            if (static_cast<int>(st_.queue.size()) < kQueueSoftCap) {
                st_.queue.push_back({family_, idx + 1});
                ++st_.outstanding;
                st_.queue_cv.notify_one();
                return;
            }
        }
        dfs(idx + 1);
    }

    static constexpr int kSpawnDepth = 10;
    static constexpr int kQueueSoftCap = 256;

    SharedState& st_;
    bool spawn_;
    std::vector<VertexSet> family_;
};

void run_parallel(SharedState& st, int workers) {
    auto loop = [&st]() {
        Worker w(st, true);
        std::unique_lock<std::mutex> lk(st.queue_mu);
        while (true) {
            st.queue_cv.wait(lk, [&st] { return !st.queue.empty() || st.outstanding == 0; });
            if (st.queue.empty()) {
                if (st.outstanding == 0) {
                    st.queue_cv.notify_all();
                    return;
                }
                continue;
            }
            SharedState::Task task = std::move(st.queue.front());
            st.queue.pop_front();
            lk.unlock();
            w.run_task(std::move(task.family), task.next);
            lk.lock();
            --st.outstanding;
            if (st.outstanding == 0 && st.queue.empty()) {
                st.queue_cv.notify_all();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(loop);
    for (std::thread& t : pool) t.join();
}

}  // namespace

SolveResult solve_exact(const SolveConfig& cfg) {
    if (cfg.n < 0 || cfg.n > VertexSet::kMaxUniverse)
        throw ParameterError("solver needs 0 <= n <= 128");
    if (cfg.r < 1) throw ParameterError("solver needs r >= 1");
    if (cfg.workers < 1) throw ParameterError("workers must be >= 1");

    std::vector<VertexSet> candidates = all_candidates(cfg.n, cfg.r);
    Hypergraph seed = greedy_lower_bound(cfg);

    SharedState st(cfg, candidates, static_cast<long>(seed.size()), seed.edges());
    const int workers = cfg.deterministic ? 1 : cfg.workers;

    // Root of the tree. With symmetry breaking on, some optimal family is a
    // relabeling of one whose first edge is {0..r-1} (the forbidden families
    // are isomorphism-invariant), so candidate 0 can be force-included; if even
    // that lone edge carries a structure, no nonempty family is free at all.
    std::optional<SharedState::Task> root;
    if (!candidates.empty()) {
        if (cfg.symmetry_break) {
            Hypergraph first_only(cfg.n, cfg.r, {candidates[0]});
            if (find_structure_using_edge(first_only, cfg.forbidden, candidates[0])
                    .status == SearchStatus::absent)
                root = SharedState::Task{{candidates[0]}, 1};
        } else {
            root = SharedState::Task{{}, 0};
        }
    }
    if (root) {
        if (workers == 1) {
            Worker w(st, false);
            w.run_task(std::move(root->family), root->next);
        } else {
            {
                std::lock_guard<std::mutex> lk(st.queue_mu);
                st.queue.push_back(std::move(*root));
                st.outstanding = 1;
            }
            run_parallel(st, workers);
        }
    }

    SolveResult out{SolveStatus::optimal, 0, 0, Hypergraph(cfg.n, cfg.r), 0};
    out.nodes_explored = st.nodes.load();
    out.lower_bound = st.read_best();
    out.witness_family = Hypergraph(cfg.n, cfg.r, st.best_family);
    const bool clean = !st.stop.load() && !st.degraded.load();
    if (clean) {
        out.status = SolveStatus::optimal;
        out.upper_bound = out.lower_bound;
    } else {
        out.status = SolveStatus::bounds_only;
        out.upper_bound = static_cast<long>(candidates.size());
    }
    TURAN_ENSURE(find_structure(out.witness_family, cfg.forbidden).status ==
                 SearchStatus::absent);
    return out;
}

StructureKind forbidden_kind_for_target(ExtremalTarget target, int k) {
    switch (target) {
        case ExtremalTarget::path: return StructureKind(StructureFamily::linear_path, k);
        case ExtremalTarget::cycle: return StructureKind(StructureFamily::linear_cycle, k);
        case ExtremalTarget::minimal_cycle:
            return StructureKind(StructureFamily::minimal_cycle, k);
    }
    throw ParameterError("unknown target");
}

CompareReport compare_with_formula(int n, int r, int k, ExtremalTarget target,
                                   const SolveConfig& limits) {
    StructureKind kind = forbidden_kind_for_target(target, k);
    CompareReport rep;
    if (k >= 4) {
        TuranValue v = turan_value_formula(n, r, k, target);
        rep.formula_value = v.value;
        rep.validity = v.note;
        rep.threshold_n = v.threshold_n;
    } else if (k == 3 && target == ExtremalTarget::minimal_cycle) {
        TuranValue v = literature_value(n, r, LiteratureValue::minimal_triangle);
        rep.formula_value = v.value;
        rep.validity = v.note;
        rep.threshold_n = v.threshold_n;
    } else if (k == 3 && target == ExtremalTarget::cycle && r == 3) {
        TuranValue v = literature_value(n, r, LiteratureValue::linear_triangle_r3);
        rep.formula_value = v.value;
        rep.validity = v.note;
        rep.threshold_n = v.threshold_n;
    } else {
        throw ParameterError("no closed form covers target " +
                             std::string(target_name(target)) + " with k = " +
                             std::to_string(k));
    }

    SolveConfig cfg(n, r, kind);
    cfg.node_limit = limits.node_limit;
    cfg.time_limit_seconds = limits.time_limit_seconds;
    cfg.deterministic = limits.deterministic;
    cfg.workers = limits.workers;
    SolveResult res = solve_exact(cfg);
    rep.solver_status = res.status;
    rep.solver_lower = res.lower_bound;
    rep.solver_upper = res.upper_bound;
    rep.nodes = res.nodes_explored;
    rep.applicable = n >= min_witness_vertices(kind, r);
    if (res.status == SolveStatus::optimal)
        rep.agree = (rep.formula_value == res.lower_bound);
    return rep;
}

}  // namespace turan
