#pragma once

#include "regkit/srl.hpp"
#include "regkit/triangles.hpp"

#include <array>
#include <optional>
#include <vector>

namespace regkit {

// Predicates a cleaned graph satisfies relative to the partition it was
// cleaned against. Each quantifies over all part pairs, diagonal included.
bool regular_graph(const VertexPartition& p, const UGraph& g, const Rational& eps,
                   std::size_t size_cap = kPairSizeCap);
// Every part pair that still has edges has density >= eps.
bool dense_graph(const VertexPartition& p, const UGraph& g, const Rational& eps);
// Every part pair that still has edges has both sides of size >= eta.
bool decent_graph(const VertexPartition& p, const UGraph& g, const Rational& eta);

struct CleanResult {
    UGraph cleaned;
    VertexPartition partition; // the eps/4-regular partition used
    SrlResult srl;
    Rational eps;
    Rational eps_prime;        // eps / 4
    Rational density_floor;    // eps / 2
    Rational size_floor;       // eps |V| / (4 k)
    // The discarded edges by reason, mutually exclusive in this order:
    std::vector<Edge> removed_irregular; // pair failed the eps/4 check
    std::vector<Edge> removed_sparse;    // pair density below eps / 2
    std::vector<Edge> removed_small;     // an endpoint's part below the size floor
};

// Regularize at eps/4 and drop every edge sitting on an irregular pair, a
// sparse pair, or a small part. The survivor satisfies regular_graph at eps/4,
// dense_graph at eps/2, and decent_graph at the size floor, and each removal
// class stays under its share of eps |V|^2 (eps/4 + eps/2 + eps/4).
// Requires 0 < eps < 1 and a non-empty vertex set.
CleanResult clean_graph(const UGraph& g, const Rational& eps, std::size_t size_cap = kPairSizeCap);

struct RemovalCertificate {
    std::array<std::size_t, 3> parts; // indices into the partition, sorted
    CountingBound counting;           // hypotheses hold, bound > 0, actual >= bound
};

struct RemovalResult {
    UGraph cleaned;
    BigInt removed_edges;
    Rational removal_budget; // eps |V|^2
    bool cleaned_triangle_free = false;
    // min positive counting bound over surviving part triples / (6 |V|^3).
    // Whenever a triangle survives cleaning, the original graph has at least
    // delta |V|^3 distinct triangles; so strictly fewer than delta |V|^3
    // triangles forces the cleaned graph to be triangle-free.
    std::optional<Rational> delta;
    std::optional<RemovalCertificate> certificate; // present iff a triangle survives
    std::optional<CleanResult> clean;              // absent in the eps >= 1 shortcut
};

// Remove at most eps |V|^2 edges so that the result is triangle-free or comes
// with a counting certificate that pins the triangle count of the original
// graph from below. eps >= 1 degenerates to deleting every edge.
RemovalResult triangle_removal(const UGraph& g, const Rational& eps,
                               std::size_t size_cap = kPairSizeCap);

} // namespace regkit
