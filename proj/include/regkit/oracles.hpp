#pragma once

#include "regkit/graph.hpp"
#include "regkit/partition.hpp"
#include "regkit/regularity.hpp"
#include "regkit/triangles.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace regkit {

// Everything in this header is a deliberately naive reference implementation:
// small, literal, and sharing nothing with the optimized code paths beyond the
// graph type. They exist so the fast implementations can be tested against
// something whose correctness is visible at a glance.

struct OracleConfig {
    std::size_t subset_cap = 6;    // side size for the pair oracle (4^cap pairs)
    std::size_t partition_cap = 7; // ground size for partition enumeration
    std::uint64_t ap_cap = 20;     // N for the exhaustive AP-free search
};

// Two-sided subset enumeration of the regularity definition: every A and B,
// eligibility and deviation straight from the formulas, adjacency read off the
// sorted edge list. With `strict`, only proper subsets A of X and B of Y are
// admitted (the textbook variant; it agrees with the non-strict one whenever
// both sides have at least two vertices).
RegularityOutcome brute_regular_pair(const VertexSet& x, const VertexSet& y, const UGraph& g,
                                     const Rational& eps, bool strict = false,
                                     const OracleConfig& cfg = {});

// All Bell(|v|) set partitions of v, in restricted-growth-string order.
std::vector<VertexPartition> all_partitions(const VertexSet& v, const OracleConfig& cfg = {});
void for_each_partition(const VertexSet& v, const std::function<void(const VertexPartition&)>& fn,
                        const OracleConfig& cfg = {});

// Triple loop over sorted vertices, edges looked up in the edge list.
std::vector<Triangle> brute_triangles(const UGraph& g);

struct ApFreeExtremum {
    std::uint64_t size = 0;
    std::vector<std::uint64_t> witness; // least maximum set, lexicographically
};

// Largest progression-free subset of {0..n-1}, by branch and bound over all
// subsets.
ApFreeExtremum max_ap_free(std::uint64_t n, const OracleConfig& cfg = {});

} // namespace regkit
