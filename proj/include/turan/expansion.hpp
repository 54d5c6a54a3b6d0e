#pragma once

#include "turan/structures.hpp"

namespace turan {

// Expand a linear path/cycle living in the 1-shadow of `host` to one in the
// host itself: compute the lists of the witness edges, find a system of
// distinct representatives, and append each representative to its edge.
// Returns nullopt exactly when the lists admit no SDR.
std::optional<StructureWitness> expand_witness(const Hypergraph& host,
                                               const StructureWitness& shadow_witness);

// From a long shadow path with large lists to a k-path in the host whose first
// edge extends the path's first edge. The shadow path must have exactly
// 2^(2l+1) edges, l = floor((k-1)/2), and every list size must be >= l+1 --
// under those hypotheses the k-path always exists, so any internal failure
// raises InternalError rather than returning empty.
StructureWitness expand_long_path(const Hypergraph& host,
                                  const StructureWitness& shadow_path, int k);

}  // namespace turan
