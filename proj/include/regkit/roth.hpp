#pragma once

#include "regkit/graph.hpp"
#include "regkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace regkit {

// {k, k+d, k+2d} as a sorted set; collapses to {k} when d = 0. Provided for
// both naturals and integers.
std::vector<std::uint64_t> progression3(std::uint64_t k, std::uint64_t d);
std::vector<std::int64_t> progression3(std::int64_t k, std::int64_t d);

// Least (k, d) with d > 0 and k, k+d, k+2d all in a; nullopt when a is free of
// three-term progressions. Duplicates in a are ignored.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_progression3(
    std::vector<std::uint64_t> a);

// Vertex encoding for the three-copy construction: copy label 0/1/2 and a
// residue mod M are packed as 3 * residue + label.
Vertex roth_encode(std::uint64_t label, std::uint64_t residue);
std::pair<std::uint64_t, std::uint64_t> roth_decode(Vertex v); // (label, residue)

struct RothInstance {
    std::uint64_t n = 0;            // construction parameter N
    std::uint64_t m = 0;            // modulus 2N + 1
    std::vector<std::uint64_t> a;   // difference set, sorted
    UGraph graph;
    VertexSet part_x, part_y, part_z;
    std::vector<Edge> edges_xy, edges_yz, edges_xz;
};

// Tripartite graph on three copies of Z/(2N+1)Z driven by a difference set
// A inside {0..N-1}: X-Y and Y-Z edges when the residue difference lies in A,
// X-Z edges when half the difference does (N+1 is the inverse of 2 mod 2N+1).
// Each edge class has exactly M|A| edges and together 3M|A|; both identities
// are recomputed and checked at construction. When A has no 3-term
// progression, every edge lies on exactly one triangle and the triangles are
// the M|A| sets {(0,i), (1,i+a), (2,i+2a)}.
RothInstance build_roth_graph(std::uint64_t n, std::vector<std::uint64_t> a);

// Canonical name (i, a) of the triangle spanned by {p, q, r}: i the X-residue,
// a in A the common difference. nullopt when the three vertices do not span a
// triangle of that canonical shape (for a progression-free A, every triangle
// of the graph is canonical).
std::optional<std::pair<std::uint64_t, std::uint64_t>> classify_triangle(Vertex p, Vertex q,
                                                                         Vertex r,
                                                                         const RothInstance& inst);

struct UniqueTriangles {
    bool holds = false;
    BigInt triangle_count;                // distinct triangles of the graph
    std::optional<Edge> counterexample;   // least edge on != 1 triangles
};

// Does every edge of g lie on exactly one triangle?
UniqueTriangles unique_triangles_check(const UGraph& g);

struct DiamondFreeBound {
    BigInt edge_count;
    BigInt triangle_count;
    bool identity_holds = false; // |E| = 3 * triangles, forced by unique triangles
    Rational budget;             // eps |V|^2
    bool within_budget = false;  // |E| <= eps |V|^2
};

// Edge budget of a graph whose every edge lies on exactly one triangle;
// DomainError when the unique-triangle property fails or eps <= 0.
DiamondFreeBound diamond_free_bound(const UGraph& g, const Rational& eps);

struct RothAudit {
    std::uint64_t n = 0;
    Rational eps;
    std::uint64_t subsets_checked = 0;
    std::uint64_t ap_free_count = 0;
    std::uint64_t max_ap_free_size = 0;
    std::vector<std::uint64_t> max_witness; // least AP-free set of maximum size
    Rational eps_times_n;                   // the size to beat for a removal-style contrast
    bool all_ok = false;
};

// Rebuild the construction for every progression-free A inside {0..N-1} and
// verify the structure: unique triangles, |E| = 3M|A|, triangle count M|A|.
// Exhaustive over 2^N subsets, so N is capped.
RothAudit roth_audit(std::uint64_t n, const Rational& eps, std::uint64_t n_cap = 14);

} // namespace regkit
