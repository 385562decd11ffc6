#include "regkit/energy.hpp"

#include "regkit/errors.hpp"

namespace regkit {

Rational pair_energy(const VertexSet& u, const VertexSet& w, const UGraph& g) {
    if (g.vertex_count() == 0) {
        throw DomainError("pair_energy needs a graph with at least one vertex");
    }
    const BigInt n(g.vertex_count());
    Rational d = edge_density(u, w, g);
    Rational weight(BigInt(u.size()) * BigInt(w.size()), n * n);
    Rational out = weight * d * d;
    return out;
}

Rational family_energy(const std::vector<VertexSet>& p, const std::vector<VertexSet>& q,
                       const UGraph& g) {
    if (g.vertex_count() == 0) {
        throw DomainError("family_energy needs a graph with at least one vertex");
    }
    Rational total(0);
    for (const VertexSet& u : p) {
        for (const VertexSet& w : q) {
            total += pair_energy(u, w, g);
        }
    }
    return total;
}

Rational mean_square_density(const UGraph& g, const VertexPartition& p) {
    if (p.ground() != g.vertices()) {
        throw DomainError("mean_square_density: partition is not over the graph's vertices");
    }
    return family_energy(p.parts(), p.parts(), g);
}

} // namespace regkit
