#pragma once

#include "regkit/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace regkit {

using Vertex = std::uint64_t;

// Immutable sorted set of vertex ids. All set-valued results in the library
// are of this type, so equality and ordering are element-wise and stable.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs); // sorts and dedups

    // {0, 1, ..., n-1}
    static VertexSet range(Vertex n);

    bool contains(Vertex v) const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<Vertex>& items() const { return items_; }
    Vertex operator[](std::size_t i) const { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Lexicographic on the sorted element lists; used wherever a deterministic
    // order over sets is needed (witness tie-breaks, part ordering).
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.items_ < b.items_; }

private:
    std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// Undirected edge with endpoints stored in increasing order.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Orders the endpoints; throws DomainError on a loop.
Edge make_edge(Vertex a, Vertex b);

// Immutable simple undirected graph on an explicit vertex set.
class UGraph {
public:
    UGraph() = default;
    // Edges are normalized, deduped, and checked against the vertex set.
    UGraph(VertexSet vertices, std::vector<Edge> edges);

    const VertexSet& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; } // sorted, unique
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;
    std::uint64_t degree(Vertex v) const;

    friend bool operator==(const UGraph& a, const UGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::size_t index_of(Vertex v) const; // npos when absent

    VertexSet vertices_;
    std::vector<Edge> edges_;
    std::vector<boost::dynamic_bitset<>> adj_;
};

// Ordered pairs (x, y) in X x Y with {x, y} an edge of g, sorted
// lexicographically. X and Y may overlap or coincide; when they do, an edge
// inside the overlap shows up in both orientations. Total: vertices outside g
// simply contribute nothing.
std::vector<std::pair<Vertex, Vertex>> all_edges_between(const VertexSet& x, const VertexSet& y,
                                                         const UGraph& g);

// |all_edges_between(x, y, g)| without materializing it.
BigInt count_edges_between(const VertexSet& x, const VertexSet& y, const UGraph& g);

// e(X,Y) / (|X| |Y|) with the 0-denominator-is-0 convention. Always in [0,1].
Rational edge_density(const VertexSet& x, const VertexSet& y, const UGraph& g);

// Neighbours of x that lie in y.
VertexSet neighbors_in(Vertex x, const VertexSet& y, const UGraph& g);

} // namespace regkit
