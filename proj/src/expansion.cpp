#include "turan/expansion.hpp"

#include <algorithm>

#include "turan/lists.hpp"
#include "turan/sdr.hpp"

namespace turan {

namespace {

// Pattern-check a shadow witness and attach the host lists of its edges.
ListAssignment checked_shadow_lists(const Hypergraph& host, const StructureWitness& w) {
    if (w.kind.family != StructureFamily::linear_path &&
        w.kind.family != StructureFamily::linear_cycle)
        throw PreconditionError("expansion needs a linear shadow structure, got " +
                                std::string(family_name(w.kind.family)));
    Hypergraph g(host.vertex_count(), host.uniformity() - 1, w.edges);
    VerifyReport rep = verify_witness_report(g, w);
    if (!rep.ok)
        throw PreconditionError(std::string("shadow witness does not verify: ") +
                                fault_name(rep.fault));
    return compute_lists(host, g);  // also rejects edges outside the shadow
}

}  // namespace

std::optional<StructureWitness> expand_witness(const Hypergraph& host,
                                               const StructureWitness& shadow_witness) {
    ListAssignment la = checked_shadow_lists(host, shadow_witness);
    std::vector<VertexSet> lists;
    lists.reserve(shadow_witness.edges.size());
    for (const VertexSet& e : shadow_witness.edges) lists.push_back(la.list_of(e));
    auto reps = find_sdr(lists);
    if (!reps) return std::nullopt;

    StructureWitness out{shadow_witness.kind, {}, shadow_witness.connectors};
    for (std::size_t i = 0; i < shadow_witness.edges.size(); ++i) {
        VertexSet e = shadow_witness.edges[i];
        e.add((*reps)[i]);
        out.edges.push_back(e);
    }
    TURAN_ENSURE(verify_witness(host, out));
    return out;
}

namespace {

// First a in `from`, b in `other` with a != b, smallest first.
std::optional<std::pair<int, int>> distinct_pair(const VertexSet& from,
                                                 const VertexSet& other) {
    for (int a = from.first(); a >= 0; a = from.next(a))
        for (int b = other.first(); b >= 0; b = other.next(b))
            if (a != b) return std::make_pair(a, b);
    return std::nullopt;
}

using Pick = std::pair<int, int>;  // (slot in the original shadow path, color)

// One step of the doubling recursion: a sub-path of 2^(t-1) slots whose lists
// all have >= t/2 colors yields a t-path (t even). `pos` holds original slot
// ids in traversal order, `lst` the current (already reduced) lists.
std::vector<Pick> doubling(const std::vector<int>& pos, const std::vector<VertexSet>& lst,
                           int t) {
    TURAN_ENSURE(t >= 4 && t % 2 == 0);
    TURAN_ENSURE(static_cast<int>(pos.size()) == (1 << (t - 1)));

    if (t == 4) {
        const VertexSet& l0 = lst[0];
        // Shared color between the first list and a non-adjacent one.
        for (int i = 2; i <= 7; ++i) {
            VertexSet common = l0 & lst[static_cast<std::size_t>(i)];
            if (common.empty()) continue;
            int alpha = common.first();
            int f = i <= 4 ? i + 1 : i - 1;
            int g = i <= 4 ? i + 2 : i - 2;
            int h = i <= 4 ? i + 3 : i - 3;
            VertexSet lf = lst[static_cast<std::size_t>(f)];
            VertexSet lg = lst[static_cast<std::size_t>(g)];
            VertexSet lh = lst[static_cast<std::size_t>(h)];
            if (alpha < lf.universe() && lf.contains(alpha)) lf.remove(alpha);
            if (alpha < lg.universe() && lg.contains(alpha)) lg.remove(alpha);
            if (alpha < lh.universe() && lh.contains(alpha)) lh.remove(alpha);
            if (auto bg = distinct_pair(lf, lg))
                return {{pos[0], alpha}, {pos[static_cast<std::size_t>(i)], alpha},
                        {pos[static_cast<std::size_t>(f)], bg->first},
                        {pos[static_cast<std::size_t>(g)], bg->second}};
            // Lists of f and g collapsed to one spare color; step one edge along.
            if (auto gh = distinct_pair(lg, lh))
                return {{pos[0], alpha}, {pos[static_cast<std::size_t>(f)], alpha},
                        {pos[static_cast<std::size_t>(g)], gh->first},
                        {pos[static_cast<std::size_t>(h)], gh->second}};
            int spare = lf.first();
            TURAN_ENSURE(spare >= 0 && lh.contains(spare));
            return {{pos[0], alpha}, {pos[static_cast<std::size_t>(i)], alpha},
                    {pos[static_cast<std::size_t>(f)], spare},
                    {pos[static_cast<std::size_t>(h)], spare}};
        }
        // The first list meets no list beyond its neighbor.
        VertexSet with_next = l0 & lst[1];
        if (!with_next.empty()) {
            int beta = with_next.first();
            VertexSet rest = l0;
            rest.remove(beta);
            int alpha = rest.first();
            TURAN_ENSURE(alpha >= 0);
            int gamma = lst[2].first();
            VertexSet l3 = lst[3];
            if (l3.contains(gamma)) l3.remove(gamma);
            int delta = l3.first();
            TURAN_ENSURE(gamma >= 0 && delta >= 0);
            return {{pos[0], alpha}, {pos[1], beta}, {pos[2], gamma}, {pos[3], delta}};
        }
        VertexSet skip = lst[1] & lst[3];
        if (!skip.empty()) {
            int gamma = skip.first();
            int alpha = l0.first();
            VertexSet l4 = lst[4];
            if (l4.contains(gamma)) l4.remove(gamma);
            int lambda = l4.first();
            TURAN_ENSURE(lambda >= 0);
            return {{pos[0], alpha}, {pos[1], gamma}, {pos[3], gamma}, {pos[4], lambda}};
        }
        // lst[1] and lst[3] disjoint, all sizes >= 2: representatives exist.
        auto reps = find_sdr({lst[1], lst[2], lst[3]});
        TURAN_ENSURE(reps.has_value());
        return {{pos[0], l0.first()}, {pos[1], (*reps)[0]}, {pos[2], (*reps)[1]},
                {pos[3], (*reps)[2]}};
    }

    const int n_slots = static_cast<int>(pos.size());
    const int half = 1 << (t - 3);
    const VertexSet& l0 = lst[0];
    for (int i = 2; i < n_slots; ++i) {
        VertexSet common = l0 & lst[static_cast<std::size_t>(i)];
        if (common.empty()) continue;
        int beta = common.first();
        std::vector<int> sub_pos;
        std::vector<VertexSet> sub_lst;
        const bool forward = i <= half + 1;
        for (int j = 1; j <= half; ++j) {
            int slot = forward ? i + j : i - j;
            sub_pos.push_back(pos[static_cast<std::size_t>(slot)]);
            VertexSet l = lst[static_cast<std::size_t>(slot)];
            if (l.contains(beta)) l.remove(beta);
            sub_lst.push_back(l);
        }
        std::vector<Pick> tail = doubling(sub_pos, sub_lst, t - 2);
        std::vector<Pick> out = {{pos[0], beta}, {pos[static_cast<std::size_t>(i)], beta}};
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }

    // No shared color beyond the neighbor: pay with two fresh colors up front.
    VertexSet l1_extra = lst[1] - l0;
    std::optional<int> gamma;
    if (!l1_extra.empty()) gamma = l1_extra.first();
    int beta = gamma ? *gamma : lst[1].first();
    VertexSet l0_rest = l0;
    if (l0_rest.contains(beta)) l0_rest.remove(beta);
    int alpha = l0_rest.first();
    TURAN_ENSURE(alpha >= 0 && alpha != beta);

    std::vector<int> sub_pos;
    std::vector<VertexSet> sub_lst;
    for (int j = 2; j < 2 + half; ++j) {
        sub_pos.push_back(pos[static_cast<std::size_t>(j)]);
        VertexSet l = lst[static_cast<std::size_t>(j)];
        if (gamma && l.contains(*gamma)) l.remove(*gamma);
        l -= l0;  // disjoint already; keeps the invariant explicit
        sub_lst.push_back(l);
    }
    std::vector<Pick> tail = doubling(sub_pos, sub_lst, t - 2);
    std::vector<Pick> out = {{pos[0], alpha}, {pos[1], beta}};
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

}  // namespace

StructureWitness expand_long_path(const Hypergraph& host,
                                  const StructureWitness& shadow_path, int k) {
    if (host.uniformity() < 3)
        throw ParameterError("long-path expansion needs a host with r >= 3");
    if (k < 3) throw ParameterError("long-path expansion needs k >= 3");
    if (shadow_path.kind.family != StructureFamily::linear_path)
        throw PreconditionError("expected a linear shadow path");
    const int ell = (k - 1) / 2;
    const int need = 1 << (2 * ell + 1);
    if (shadow_path.kind.k != need)
        throw PreconditionError("shadow path must have exactly 2^(2l+1) = " +
                                std::to_string(need) + " edges, got " +
                                std::to_string(shadow_path.kind.k));

    ListAssignment la = checked_shadow_lists(host, shadow_path);
    std::vector<VertexSet> lists;
    for (const VertexSet& e : shadow_path.edges) {
        VertexSet l = la.list_of(e);
        if (l.size() < ell + 1)
            throw PreconditionError("list of " + e.to_string() + " has " +
                                    std::to_string(l.size()) + " colors, needs >= " +
                                    std::to_string(ell + 1));
        lists.push_back(l);
    }

    const int t = k % 2 == 0 ? k : k + 1;  // same list budget; truncate afterwards
    std::vector<int> pos(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) pos[static_cast<std::size_t>(i)] = i;
    std::vector<Pick> picks = doubling(pos, lists, t);
    TURAN_ENSURE(static_cast<int>(picks.size()) == t);
    picks.resize(static_cast<std::size_t>(k));
    TURAN_ENSURE(picks.front().first == 0);

    StructureWitness out{StructureKind(StructureFamily::linear_path, k), {}, {}};
    for (const Pick& p : picks) {
        VertexSet e = shadow_path.edges[static_cast<std::size_t>(p.first)];
        e.add(p.second);
        out.edges.push_back(e);
    }
    for (int i = 0; i + 1 < k; ++i)
        out.connectors.push_back((out.edges[static_cast<std::size_t>(i)] &
                                  out.edges[static_cast<std::size_t>(i + 1)])
                                     .first());
    TURAN_ENSURE(verify_witness(host, out));
    return out;
}

}  // namespace turan
