#include "regkit/graph.hpp"

#include "regkit/errors.hpp"

#include <algorithm>

namespace regkit {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::range(Vertex n) {
    std::vector<Vertex> vs(n);
    for (Vertex i = 0; i < n; ++i) {
        vs[i] = i;
    }
    return VertexSet(std::move(vs));
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw DomainError("loops are not allowed");
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

UGraph::UGraph(VertexSet vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        Edge n = make_edge(e.u, e.v); // rejects loops, fixes orientation
        if (!vertices_.contains(n.u) || !vertices_.contains(n.v)) {
            throw DomainError("edge endpoint outside the vertex set");
        }
        edges_.push_back(n);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    const std::size_t n = vertices_.size();
    adj_.assign(n, boost::dynamic_bitset<>(n));
    for (const Edge& e : edges_) {
        std::size_t iu = index_of(e.u);
        std::size_t iv = index_of(e.v);
        adj_[iu].set(iv);
        adj_[iv].set(iu);
    }
}

std::size_t UGraph::index_of(Vertex v) const {
    const auto& items = vertices_.items();
    auto it = std::lower_bound(items.begin(), items.end(), v);
    if (it == items.end() || *it != v) {
        return static_cast<std::size_t>(-1);
    }
    return static_cast<std::size_t>(it - items.begin());
}

bool UGraph::has_vertex(Vertex v) const {
    return vertices_.contains(v);
}

bool UGraph::adjacent(Vertex a, Vertex b) const {
    std::size_t ia = index_of(a);
    std::size_t ib = index_of(b);
    if (ia == static_cast<std::size_t>(-1) || ib == static_cast<std::size_t>(-1)) {
        return false;
    }
    return adj_[ia].test(ib);
}

std::uint64_t UGraph::degree(Vertex v) const {
    std::size_t iv = index_of(v);
    if (iv == static_cast<std::size_t>(-1)) {
        return 0;
    }
    return adj_[iv].count();
}

std::vector<std::pair<Vertex, Vertex>> all_edges_between(const VertexSet& x, const VertexSet& y,
                                                         const UGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a : x) {
        for (Vertex b : y) {
            if (g.adjacent(a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out; // x and y are sorted, so the double loop emits in lex order
}

BigInt count_edges_between(const VertexSet& x, const VertexSet& y, const UGraph& g) {
    std::uint64_t count = 0;
    for (Vertex a : x) {
        for (Vertex b : y) {
            if (g.adjacent(a, b)) {
                ++count;
            }
        }
    }
    return BigInt(count);
}

Rational edge_density(const VertexSet& x, const VertexSet& y, const UGraph& g) {
    BigInt denom = BigInt(x.size()) * BigInt(y.size());
    return ratio_or_zero(count_edges_between(x, y, g), denom);
}

VertexSet neighbors_in(Vertex x, const VertexSet& y, const UGraph& g) {
    std::vector<Vertex> out;
    for (Vertex b : y) {
        if (g.adjacent(x, b)) {
            out.push_back(b);
        }
    }
    return VertexSet(std::move(out));
}

} // namespace regkit
