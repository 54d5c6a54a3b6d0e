#pragma once

#include <optional>
#include <vector>

#include "turan/vertex_set.hpp"

namespace turan {

// A family S_1,...,S_q to pick distinct representatives from. The optional
// p/q hints carry the shape of the Hall-style instances some callers build;
// the matcher itself ignores them.
struct SdrProblem {
    std::vector<VertexSet> sets;
    std::optional<int> p;
    std::optional<int> q;
};

// Distinct x_i in S_i via augmenting-path bipartite matching; nullopt exactly
// when Hall's condition fails. Sets are processed in order and candidate
// elements tried ascending, so the representatives are deterministic.
std::optional<std::vector<int>> find_sdr(const SdrProblem& prob);

inline std::optional<std::vector<int>> find_sdr(const std::vector<VertexSet>& sets) {
    return find_sdr(SdrProblem{sets, std::nullopt, std::nullopt});
}

}  // namespace turan
