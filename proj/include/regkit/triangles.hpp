#pragma once

#include "regkit/graph.hpp"
#include "regkit/regularity.hpp"

#include <array>
#include <vector>

namespace regkit {

// Unordered triangle, vertices sorted ascending.
using Triangle = std::array<Vertex, 3>;

// {x, y}, {x, z}, {y, z} are all edges (which forces the three apart).
bool triangle_in_graph(Vertex x, Vertex y, Vertex z, const UGraph& g);

// Ordered triples (x, y, z) of X x Y x Z spanning a triangle, lexicographic.
// The sets may overlap; adjacency keeps the coordinates distinct.
std::vector<std::array<Vertex, 3>> triangle_triples(const VertexSet& x, const VertexSet& y,
                                                    const VertexSet& z, const UGraph& g);
BigInt count_triangle_triples(const VertexSet& x, const VertexSet& y, const VertexSet& z,
                              const UGraph& g);

// All triangles of g, sorted lexicographically.
std::vector<Triangle> triangle_set(const UGraph& g);
bool triangle_free(const UGraph& g);

struct CountingBound {
    bool hypotheses_ok = false; // three eps-regular pairs, three densities >= 2 eps
    Rational dxy, dxz, dyz;
    // (1 - 2 eps)(dxy - eps)(dxz - eps)(dyz - eps) |X||Y||Z| when the
    // hypotheses hold, else 0. Guaranteed <= actual under the hypotheses.
    Rational bound;
    BigInt actual; // ordered triangle triples in X x Y x Z
};

// The counting inequality for one triple of sets, evaluated exactly.
CountingBound counting_lemma_bound(const VertexSet& x, const VertexSet& y, const VertexSet& z,
                                   const UGraph& g, const Rational& eps,
                                   std::size_t size_cap = kPairSizeCap);

struct NeighborDefect {
    BigInt low_count;   // x in X with |N(x) cap Y| < (d(X,Y) - eps) |Y|
    Rational threshold; // eps |X|; regularity forces low_count < threshold
};

// Requires (X, Y) eps-regular, d(X,Y) >= 2 eps, and X non-empty.
NeighborDefect neighbor_bound_defect(const VertexSet& x, const VertexSet& y, const UGraph& g,
                                     const Rational& eps, std::size_t size_cap = kPairSizeCap);

struct NeighborhoodEdges {
    BigInt lhs;   // e(N(v) cap Y, N(v) cap Z)
    Rational rhs; // (d(Y,Z) - eps) |N(v) cap Y| |N(v) cap Z|; lhs >= rhs
};

// Requires the three pairs eps-regular, the three densities >= 2 eps, v in X,
// and both neighbourhoods of v at least (density - eps) of their side.
NeighborhoodEdges neighborhood_edges_bound(Vertex v, const VertexSet& x, const VertexSet& y,
                                           const VertexSet& z, const UGraph& g,
                                           const Rational& eps,
                                           std::size_t size_cap = kPairSizeCap);

// Ordered triple count / 6: a lower bound on the number of distinct unordered
// triangles met by X x Y x Z, valid even when the sets overlap (each triangle
// is hit by at most 6 ordered triples).
Rational unordered_triangle_lower_bound(const VertexSet& x, const VertexSet& y, const VertexSet& z,
                                        const UGraph& g);

} // namespace regkit
