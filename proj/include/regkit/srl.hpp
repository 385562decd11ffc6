#pragma once

#include "regkit/partition.hpp"
#include "regkit/regularity.hpp"
#include "regkit/tower.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace regkit {

// Ordered part-index pairs (i, j) whose parts fail the exact eps-regularity
// check. The diagonal participates: (i, i) is tested like any other pair.
// Sorted lexicographically; symmetric (both orientations appear).
std::vector<std::pair<std::size_t, std::size_t>> irregular_pairs(
    const Rational& eps, const UGraph& g, const VertexPartition& p,
    std::size_t size_cap = kPairSizeCap);

struct PartitionRegularity {
    bool regular = false;
    Rational defect; // sum of |R||S| over irregular ordered pairs
    Rational budget; // eps |V|^2
};

// A partition is eps-regular when the mass of its irregular ordered pairs is
// at most eps |V|^2.
PartitionRegularity is_regular_partition(const Rational& eps, const UGraph& g,
                                         const VertexPartition& p,
                                         std::size_t size_cap = kPairSizeCap);

// One refinement round. Every irregular pair contributes the two halves of its
// witness: part R is split along every witness set landing in it, and the
// pieces are the common refinement of those binary splits. Requires the
// partition to fail is_regular_partition.
//
// For a k-part input the result refines p, raises the mean square density by
// more than eps^5, splits each part into at most 2^(k+1) pieces, and so has at
// most k 2^(k+1) parts.
VertexPartition refine_step(const UGraph& g, const VertexPartition& p, const Rational& eps,
                            std::size_t size_cap = kPairSizeCap);

struct SrlResult {
    VertexPartition partition;
    std::uint64_t iterations = 0;
    std::vector<Rational> energy_trajectory; // msd of every partition seen, first to last
    Rational final_defect;
    TowerBound part_bound; // a-priori ceiling on the part count
    bool certified = false; // the returned partition passed the exact check
};

// Iterate refine_step until the exact checker certifies eps-regularity.
// Energy lives in [0, 1] and each round gains more than eps^5, so the loop is
// bounded by ceil(eps^-5) rounds; in practice it stops far earlier (parts
// never outnumber vertices, and discrete partitions are regular).
SrlResult szemeredi_partition(const UGraph& g, const Rational& eps,
                              std::optional<VertexPartition> initial = std::nullopt,
                              std::size_t size_cap = kPairSizeCap);

} // namespace regkit
