#include "regkit/partition.hpp"

#include "regkit/errors.hpp"

#include <algorithm>

namespace regkit {

VertexPartition::VertexPartition(VertexSet ground, std::vector<VertexSet> parts)
    : ground_(std::move(ground)), parts_(std::move(parts)) {
    if (!is_partition(ground_, parts_)) {
        throw DomainError("parts do not partition the ground set");
    }
    std::sort(parts_.begin(), parts_.end(),
              [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
}

VertexPartition VertexPartition::trivial(VertexSet ground) {
    if (ground.empty()) {
        return VertexPartition();
    }
    VertexSet g = ground;
    return VertexPartition(std::move(g), {std::move(ground)});
}

VertexPartition VertexPartition::discrete(VertexSet ground) {
    std::vector<VertexSet> parts;
    parts.reserve(ground.size());
    for (Vertex v : ground) {
        parts.push_back(VertexSet{v});
    }
    return VertexPartition(std::move(ground), std::move(parts));
}

std::size_t VertexPartition::part_of(Vertex v) const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].contains(v)) {
            return i;
        }
    }
    throw DomainError("vertex outside the partitioned ground set");
}

bool is_partition(const VertexSet& v, const std::vector<VertexSet>& parts) {
    std::size_t total = 0;
    std::vector<Vertex> all;
    for (const VertexSet& p : parts) {
        if (p.empty()) {
            return false;
        }
        total += p.size();
        all.insert(all.end(), p.begin(), p.end());
    }
    if (total != v.size()) {
        return false; // covers + disjoint forces the sizes to add up
    }
    std::sort(all.begin(), all.end());
    return all == v.items();
}

bool refines(const VertexSet& v, const VertexPartition& finer, const VertexPartition& coarser) {
    if (finer.ground() != v || coarser.ground() != v) {
        return false;
    }
    for (const VertexSet& q : finer.parts()) {
        const VertexSet& host = coarser.part(coarser.part_of(q[0]));
        if (!is_subset(q, host)) {
            return false;
        }
    }
    return true;
}

VertexPartition common_refinement(const VertexSet& v, const std::vector<VertexPartition>& family) {
    for (const VertexPartition& p : family) {
        if (p.ground() != v) {
            throw DomainError("common_refinement: family member does not partition v");
        }
    }
    std::vector<VertexSet> cells;
    if (!v.empty()) {
        cells.push_back(v);
    }
    for (const VertexPartition& p : family) {
        std::vector<VertexSet> next;
        for (const VertexSet& cell : cells) {
            for (const VertexSet& part : p.parts()) {
                VertexSet piece = set_intersection(cell, part);
                if (!piece.empty()) {
                    next.push_back(std::move(piece));
                }
            }
        }
        cells = std::move(next);
    }
    return VertexPartition(v, std::move(cells));
}

std::vector<VertexSet> binary_split(const VertexSet& x, const VertexSet& y) {
    if (y.empty()) {
        throw DomainError("binary_split requires a non-empty Y");
    }
    if (!is_subset(x, y)) {
        throw DomainError("binary_split requires X to be a subset of Y");
    }
    if (!x.empty() && x != y) {
        return {x, set_difference(y, x)};
    }
    return {y}; // X empty or X = Y: nothing to split (never emits an empty part)
}

} // namespace regkit
