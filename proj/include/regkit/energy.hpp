#pragma once

#include "regkit/graph.hpp"
#include "regkit/partition.hpp"

#include <vector>

namespace regkit {

// |U||W| d(U,W)^2 / |V(G)|^2. The graph must have at least one vertex.
Rational pair_energy(const VertexSet& u, const VertexSet& w, const UGraph& g);

// Sum of pair_energy over P x Q. The families are arbitrary collections of
// vertex sets; nothing requires them to partition anything.
Rational family_energy(const std::vector<VertexSet>& p, const std::vector<VertexSet>& q,
                       const UGraph& g);

// family_energy of the parts against themselves: the mean square density of
// the partition. Lives in [0, 1]; refining can only increase it.
Rational mean_square_density(const UGraph& g, const VertexPartition& p);

} // namespace regkit
