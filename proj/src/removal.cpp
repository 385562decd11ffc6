#include "regkit/removal.hpp"

#include "regkit/errors.hpp"

#include <algorithm>

namespace regkit {

bool regular_graph(const VertexPartition& p, const UGraph& g, const Rational& eps,
                   std::size_t size_cap) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i; j < p.size(); ++j) {
            if (!check_regular_pair(p.part(i), p.part(j), g, eps, size_cap).regular) {
                return false;
            }
        }
    }
    return true;
}

bool dense_graph(const VertexPartition& p, const UGraph& g, const Rational& eps) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i; j < p.size(); ++j) {
            if (count_edges_between(p.part(i), p.part(j), g) == 0) {
                continue;
            }
            if (edge_density(p.part(i), p.part(j), g) < eps) {
                return false;
            }
        }
    }
    return true;
}

bool decent_graph(const VertexPartition& p, const UGraph& g, const Rational& eta) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i; j < p.size(); ++j) {
            if (count_edges_between(p.part(i), p.part(j), g) == 0) {
                continue;
            }
            if (Rational(BigInt(p.part(i).size())) < eta ||
                Rational(BigInt(p.part(j).size())) < eta) {
                return false;
            }
        }
    }
    return true;
}

CleanResult clean_graph(const UGraph& g, const Rational& eps, std::size_t size_cap) {
    if (eps <= 0 || eps >= 1) {
        throw DomainError("clean_graph requires 0 < eps < 1");
    }
    if (g.vertex_count() == 0) {
        throw DomainError("clean_graph needs a graph with at least one vertex");
    }

    CleanResult out;
    out.eps = eps;
    out.eps_prime = eps / 4;
    out.density_floor = eps / 2;
    out.srl = szemeredi_partition(g, out.eps_prime, std::nullopt, size_cap);
    out.partition = out.srl.partition;
    const VertexPartition& parts = out.partition;
    const std::size_t k = parts.size();
    out.size_floor =
        eps * Rational(BigInt(g.vertex_count()), BigInt(4) * BigInt(k));

    // Per-pair verdicts, computed once on the unordered pairs.
    std::vector<std::vector<bool>> pair_irregular(k, std::vector<bool>(k, false));
    std::vector<std::vector<bool>> pair_sparse(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            bool irregular =
                !check_regular_pair(parts.part(i), parts.part(j), g, out.eps_prime, size_cap)
                     .regular;
            bool sparse = edge_density(parts.part(i), parts.part(j), g) < out.density_floor;
            pair_irregular[i][j] = pair_irregular[j][i] = irregular;
            pair_sparse[i][j] = pair_sparse[j][i] = sparse;
        }
    }
    std::vector<bool> small(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        small[i] = Rational(BigInt(parts.part(i).size())) < out.size_floor;
    }

    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        const std::size_t i = parts.part_of(e.u);
        const std::size_t j = parts.part_of(e.v);
        if (pair_irregular[i][j]) {
            out.removed_irregular.push_back(e);
        } else if (pair_sparse[i][j]) {
            out.removed_sparse.push_back(e);
        } else if (small[i] || small[j]) {
            out.removed_small.push_back(e);
        } else {
            kept.push_back(e);
        }
    }
    out.cleaned = UGraph(g.vertices(), std::move(kept));
    return out;
}

RemovalResult triangle_removal(const UGraph& g, const Rational& eps, std::size_t size_cap) {
    if (eps <= 0) {
        throw DomainError("triangle_removal requires eps > 0");
    }
    if (g.vertex_count() == 0) {
        throw DomainError("triangle_removal needs a graph with at least one vertex");
    }
    RemovalResult out;
    const BigInt n(g.vertex_count());
    out.removal_budget = eps * Rational(n * n);

    if (eps >= 1) {
        // The budget covers every edge; removing them all is trivially valid.
        out.removed_edges = BigInt(g.edge_count());
        out.cleaned = UGraph(g.vertices(), {});
        out.cleaned_triangle_free = true;
        return out;
    }

    CleanResult clean = clean_graph(g, eps, size_cap);
    const UGraph& h = clean.cleaned;
    const VertexPartition& parts = clean.partition;
    out.removed_edges = BigInt(clean.removed_irregular.size()) + clean.removed_sparse.size() +
                        clean.removed_small.size();

    // Counting bound on every surviving part triple; the minimum positive one
    // calibrates delta.
    std::optional<Rational> min_bound;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i; j < parts.size(); ++j) {
            if (count_edges_between(parts.part(i), parts.part(j), h) == 0) {
                continue;
            }
            for (std::size_t l = j; l < parts.size(); ++l) {
                if (count_edges_between(parts.part(i), parts.part(l), h) == 0 ||
                    count_edges_between(parts.part(j), parts.part(l), h) == 0) {
                    continue;
                }
                CountingBound cb = counting_lemma_bound(parts.part(i), parts.part(j),
                                                        parts.part(l), h, clean.eps_prime,
                                                        size_cap);
                if (cb.hypotheses_ok && cb.bound > 0 &&
                    (!min_bound.has_value() || cb.bound < *min_bound)) {
                    min_bound = cb.bound;
                }
            }
        }
    }
    if (min_bound.has_value()) {
        out.delta = *min_bound / Rational(BigInt(6) * n * n * n);
    }

    std::vector<Triangle> survivors = triangle_set(h);
    out.cleaned_triangle_free = survivors.empty();
    if (!survivors.empty()) {
        const Triangle& t = survivors.front();
        std::array<std::size_t, 3> idx = {parts.part_of(t[0]), parts.part_of(t[1]),
                                          parts.part_of(t[2])};
        std::sort(idx.begin(), idx.end());
        RemovalCertificate cert;
        cert.parts = idx;
        cert.counting = counting_lemma_bound(parts.part(idx[0]), parts.part(idx[1]),
                                             parts.part(idx[2]), h, clean.eps_prime, size_cap);
        out.certificate = std::move(cert);
    }
    out.clean = std::move(clean);
    return out;
}

} // namespace regkit
