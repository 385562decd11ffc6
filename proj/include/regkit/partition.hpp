#pragma once

#include "regkit/graph.hpp"

#include <cstddef>
#include <vector>

namespace regkit {

// Partition of a finite vertex set: non-empty, pairwise disjoint parts whose
// union is the ground set. Parts are kept sorted by least element, so two
// equal partitions compare equal structurally. The invariants are validated at
// construction and can never be broken afterwards.
class VertexPartition {
public:
    VertexPartition() = default; // the (empty) partition of the empty set
    VertexPartition(VertexSet ground, std::vector<VertexSet> parts);

    // {ground}, or no parts at all when the ground set is empty.
    static VertexPartition trivial(VertexSet ground);
    // All singletons.
    static VertexPartition discrete(VertexSet ground);

    const VertexSet& ground() const { return ground_; }
    const std::vector<VertexSet>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    const VertexSet& part(std::size_t i) const { return parts_[i]; }

    // Index of the part containing v; DomainError when v is not in the ground set.
    std::size_t part_of(Vertex v) const;

    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

private:
    VertexSet ground_;
    std::vector<VertexSet> parts_;
};

// True iff parts are all non-empty, pairwise disjoint, and cover exactly v.
bool is_partition(const VertexSet& v, const std::vector<VertexSet>& parts);

// Both arguments partition v and every part of finer lies inside a part of
// coarser. False (not an error) when a ground set does not match v.
bool refines(const VertexSet& v, const VertexPartition& finer, const VertexPartition& coarser);

// Coarsest partition of v refining every member of the family; the empty
// family yields the trivial partition. Every member must partition v.
VertexPartition common_refinement(const VertexSet& v, const std::vector<VertexPartition>& family);

// Split y along x: {x, y \ x} when x is a non-empty proper subset of y,
// {y} unchanged when x is empty or all of y. DomainError when y is empty or
// x is not a subset of y.
std::vector<VertexSet> binary_split(const VertexSet& x, const VertexSet& y);

} // namespace regkit
