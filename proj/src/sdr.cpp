#include "turan/sdr.hpp"

#include <algorithm>
#include <vector>

namespace turan {

namespace {

// One augmenting step of the classic Hungarian-style matching: can set i get a
// representative, kicking earlier sets to alternatives?
bool augment(const std::vector<std::vector<int>>& adj, int i, std::vector<char>& visited,
             std::vector<int>& owner) {
    for (int x : adj[static_cast<std::size_t>(i)]) {
        if (visited[static_cast<std::size_t>(x)]) continue;
        visited[static_cast<std::size_t>(x)] = 1;
        if (owner[static_cast<std::size_t>(x)] < 0 ||
            augment(adj, owner[static_cast<std::size_t>(x)], visited, owner)) {
            owner[static_cast<std::size_t>(x)] = i;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_sdr(const SdrProblem& prob) {
    const std::size_t q = prob.sets.size();
    if (q == 0) return std::vector<int>{};

    // Compress the ground set, keeping ascending element order.
    std::vector<int> elements;
    for (const VertexSet& s : prob.sets)
        for (int v = s.first(); v >= 0; v = s.next(v)) elements.push_back(v);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    std::vector<std::vector<int>> adj(q);
    for (std::size_t i = 0; i < q; ++i)
        for (int v = prob.sets[i].first(); v >= 0; v = prob.sets[i].next(v))
            adj[i].push_back(static_cast<int>(
                std::lower_bound(elements.begin(), elements.end(), v) - elements.begin()));

    std::vector<int> owner(elements.size(), -1);
    for (std::size_t i = 0; i < q; ++i) {
        // A still-free element is taken outright; augmenting only reshuffles
        // when necessary, so early sets keep their smallest choices.
        bool placed = false;
        for (int x : adj[i])
            if (owner[static_cast<std::size_t>(x)] < 0) {
                owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
                placed = true;
                break;
            }
        if (placed) continue;
        std::vector<char> visited(elements.size(), 0);
        if (!augment(adj, static_cast<int>(i), visited, owner))
            return std::nullopt;  // Hall's condition fails at this prefix
    }
    std::vector<int> reps(q, -1);
    for (std::size_t x = 0; x < owner.size(); ++x)
        if (owner[x] >= 0) reps[static_cast<std::size_t>(owner[x])] = elements[x];
    return reps;
}

}  // namespace turan
