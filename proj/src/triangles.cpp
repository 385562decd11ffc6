#include "regkit/triangles.hpp"

#include "regkit/errors.hpp"

namespace regkit {

bool triangle_in_graph(Vertex x, Vertex y, Vertex z, const UGraph& g) {
    return g.adjacent(x, y) && g.adjacent(x, z) && g.adjacent(y, z);
}

std::vector<std::array<Vertex, 3>> triangle_triples(const VertexSet& x, const VertexSet& y,
                                                    const VertexSet& z, const UGraph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex a : x) {
        for (Vertex b : y) {
            if (!g.adjacent(a, b)) {
                continue;
            }
            for (Vertex c : z) {
                if (g.adjacent(a, c) && g.adjacent(b, c)) {
                    out.push_back({a, b, c});
                }
            }
        }
    }
    return out;
}

BigInt count_triangle_triples(const VertexSet& x, const VertexSet& y, const VertexSet& z,
                              const UGraph& g) {
    std::uint64_t count = 0;
    for (Vertex a : x) {
        for (Vertex b : y) {
            if (!g.adjacent(a, b)) {
                continue;
            }
            for (Vertex c : z) {
                if (g.adjacent(a, c) && g.adjacent(b, c)) {
                    ++count;
                }
            }
        }
    }
    return BigInt(count);
}

std::vector<Triangle> triangle_set(const UGraph& g) {
    std::vector<Triangle> out;
    for (const Edge& e : g.edges()) {
        for (Vertex w : g.vertices()) {
            if (w > e.v && g.adjacent(e.u, w) && g.adjacent(e.v, w)) {
                out.push_back({e.u, e.v, w}); // u < v < w: one entry per triangle
            }
        }
    }
    return out; // edges sorted + w ascending => lexicographic
}

bool triangle_free(const UGraph& g) {
    for (const Edge& e : g.edges()) {
        for (Vertex w : g.vertices()) {
            if (w != e.u && w != e.v && g.adjacent(e.u, w) && g.adjacent(e.v, w)) {
                return false;
            }
        }
    }
    return true;
}

CountingBound counting_lemma_bound(const VertexSet& x, const VertexSet& y, const VertexSet& z,
                                   const UGraph& g, const Rational& eps, std::size_t size_cap) {
    if (eps <= 0) {
        throw DomainError("counting bound requires eps > 0");
    }
    CountingBound out;
    out.dxy = edge_density(x, y, g);
    out.dxz = edge_density(x, z, g);
    out.dyz = edge_density(y, z, g);
    const Rational two_eps = eps * 2;
    const bool dense = out.dxy >= two_eps && out.dxz >= two_eps && out.dyz >= two_eps;
    const bool regular = dense && // densities are cheap; skip the scans when they already fail
                         check_regular_pair(x, y, g, eps, size_cap).regular &&
                         check_regular_pair(x, z, g, eps, size_cap).regular &&
                         check_regular_pair(y, z, g, eps, size_cap).regular;
    out.hypotheses_ok = dense && regular;
    out.actual = count_triangle_triples(x, y, z, g);
    if (out.hypotheses_ok) {
        Rational sizes(BigInt(x.size()) * BigInt(y.size()) * BigInt(z.size()));
        Rational factor = (Rational(1) - two_eps) * (out.dxy - eps) * (out.dxz - eps) *
                          (out.dyz - eps);
        out.bound = factor * sizes;
    } else {
        out.bound = Rational(0);
    }
    return out;
}

NeighborDefect neighbor_bound_defect(const VertexSet& x, const VertexSet& y, const UGraph& g,
                                     const Rational& eps, std::size_t size_cap) {
    if (x.empty()) {
        throw DomainError("neighbor bound requires a non-empty X");
    }
    const Rational d = edge_density(x, y, g);
    if (d < eps * 2) {
        throw DomainError("neighbor bound requires d(X,Y) >= 2 eps");
    }
    if (!check_regular_pair(x, y, g, eps, size_cap).regular) {
        throw DomainError("neighbor bound requires an eps-regular pair");
    }
    const Rational floor = (d - eps) * Rational(BigInt(y.size()));
    std::uint64_t low = 0;
    for (Vertex a : x) {
        if (Rational(BigInt(neighbors_in(a, y, g).size())) < floor) {
            ++low;
        }
    }
    return NeighborDefect{BigInt(low), eps * Rational(BigInt(x.size()))};
}

NeighborhoodEdges neighborhood_edges_bound(Vertex v, const VertexSet& x, const VertexSet& y,
                                           const VertexSet& z, const UGraph& g,
                                           const Rational& eps, std::size_t size_cap) {
    if (!x.contains(v)) {
        throw DomainError("neighborhood bound: v must lie in X");
    }
    const Rational dxy = edge_density(x, y, g);
    const Rational dxz = edge_density(x, z, g);
    const Rational dyz = edge_density(y, z, g);
    const Rational two_eps = eps * 2;
    if (dxy < two_eps || dxz < two_eps || dyz < two_eps) {
        throw DomainError("neighborhood bound requires all three densities >= 2 eps");
    }
    if (!check_regular_pair(x, y, g, eps, size_cap).regular ||
        !check_regular_pair(x, z, g, eps, size_cap).regular ||
        !check_regular_pair(y, z, g, eps, size_cap).regular) {
        throw DomainError("neighborhood bound requires three eps-regular pairs");
    }
    const VertexSet ny = neighbors_in(v, y, g);
    const VertexSet nz = neighbors_in(v, z, g);
    if (Rational(BigInt(ny.size())) < (dxy - eps) * Rational(BigInt(y.size())) ||
        Rational(BigInt(nz.size())) < (dxz - eps) * Rational(BigInt(z.size()))) {
        throw DomainError("neighborhood bound: v's neighbourhoods are too small");
    }
    NeighborhoodEdges out;
    out.lhs = count_edges_between(ny, nz, g);
    out.rhs = (dyz - eps) * Rational(BigInt(ny.size()) * BigInt(nz.size()));
    return out;
}

Rational unordered_triangle_lower_bound(const VertexSet& x, const VertexSet& y, const VertexSet& z,
                                        const UGraph& g) {
    return Rational(count_triangle_triples(x, y, z, g), BigInt(6));
}

} // namespace regkit
