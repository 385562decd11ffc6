#include "regkit/roth.hpp"

#include "regkit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace regkit {

std::vector<std::uint64_t> progression3(std::uint64_t k, std::uint64_t d) {
    std::vector<std::uint64_t> out{k, k + d, k + d + d};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int64_t> progression3(std::int64_t k, std::int64_t d) {
    std::vector<std::int64_t> out{k, k + d, k + d + d};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_progression3(
    std::vector<std::uint64_t> a) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    auto member = [&](std::uint64_t v) { return std::binary_search(a.begin(), a.end(), v); };
    if (a.size() < 3) {
        return std::nullopt;
    }
    const std::uint64_t top = a.back();
    for (std::uint64_t k : a) {
        for (std::uint64_t d = 1; k + 2 * d <= top; ++d) {
            if (member(k + d) && member(k + 2 * d)) {
                return std::make_pair(k, d);
            }
        }
    }
    return std::nullopt;
}

Vertex roth_encode(std::uint64_t label, std::uint64_t residue) {
    if (label > 2) {
        throw DomainError("roth_encode: label must be 0, 1, or 2");
    }
    return 3 * residue + label;
}

std::pair<std::uint64_t, std::uint64_t> roth_decode(Vertex v) {
    return {v % 3, v / 3};
}

RothInstance build_roth_graph(std::uint64_t n, std::vector<std::uint64_t> a) {
    if (n == 0) {
        throw DomainError("build_roth_graph requires N >= 1");
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (std::uint64_t v : a) {
        if (v >= n) {
            throw DomainError("difference set must lie inside {0..N-1}");
        }
    }

    RothInstance inst;
    inst.n = n;
    inst.m = 2 * n + 1;
    inst.a = std::move(a);
    const std::uint64_t m = inst.m;

    std::vector<bool> in_a(m, false);
    for (std::uint64_t v : inst.a) {
        in_a[v] = true;
    }
    auto diff = [m](std::uint64_t to, std::uint64_t from) { return (to + m - from) % m; };

    std::vector<Vertex> xs, ys, zs;
    for (std::uint64_t r = 0; r < m; ++r) {
        xs.push_back(roth_encode(0, r));
        ys.push_back(roth_encode(1, r));
        zs.push_back(roth_encode(2, r));
    }
    inst.part_x = VertexSet(xs);
    inst.part_y = VertexSet(ys);
    inst.part_z = VertexSet(zs);

    // Edges straight from the membership conditions, one residue pair at a time.
    for (std::uint64_t i = 0; i < m; ++i) {
        for (std::uint64_t j = 0; j < m; ++j) {
            if (in_a[diff(j, i)]) {
                inst.edges_xy.push_back(make_edge(roth_encode(0, i), roth_encode(1, j)));
                inst.edges_yz.push_back(make_edge(roth_encode(1, i), roth_encode(2, j)));
            }
            if (in_a[diff(j, i) * (n + 1) % m]) {
                inst.edges_xz.push_back(make_edge(roth_encode(0, i), roth_encode(2, j)));
            }
        }
    }

    std::vector<Edge> all;
    all.reserve(inst.edges_xy.size() + inst.edges_yz.size() + inst.edges_xz.size());
    all.insert(all.end(), inst.edges_xy.begin(), inst.edges_xy.end());
    all.insert(all.end(), inst.edges_yz.begin(), inst.edges_yz.end());
    all.insert(all.end(), inst.edges_xz.begin(), inst.edges_xz.end());
    inst.graph = UGraph(VertexSet::range(3 * m), std::move(all));

    const std::uint64_t class_size = m * inst.a.size();
    if (inst.edges_xy.size() != class_size || inst.edges_yz.size() != class_size ||
        inst.edges_xz.size() != class_size || inst.graph.edge_count() != 3 * class_size) {
        throw std::logic_error("construction identity |E| = 3 M |A| failed");
    }
    return inst;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> classify_triangle(
    Vertex p, Vertex q, Vertex r, const RothInstance& inst) {
    Vertex by_label[3];
    bool seen[3] = {false, false, false};
    for (Vertex v : {p, q, r}) {
        auto [label, residue] = roth_decode(v);
        if (residue >= inst.m || seen[label]) {
            return std::nullopt;
        }
        seen[label] = true;
        by_label[label] = v;
    }
    const UGraph& g = inst.graph;
    if (!g.adjacent(by_label[0], by_label[1]) || !g.adjacent(by_label[1], by_label[2]) ||
        !g.adjacent(by_label[0], by_label[2])) {
        return std::nullopt;
    }
    const std::uint64_t m = inst.m;
    const std::uint64_t i = roth_decode(by_label[0]).second;
    const std::uint64_t ry = roth_decode(by_label[1]).second;
    const std::uint64_t rz = roth_decode(by_label[2]).second;
    const std::uint64_t a = (ry + m - i) % m;
    if (rz != (i + 2 * a) % m) {
        return std::nullopt; // a genuine triangle, but not of the canonical shape
    }
    return std::make_pair(i, a);
}

UniqueTriangles unique_triangles_check(const UGraph& g) {
    UniqueTriangles out;
    out.holds = true;
    std::uint64_t incidences = 0;
    for (const Edge& e : g.edges()) {
        std::uint64_t on_edge = 0;
        for (Vertex w : g.vertices()) {
            if (w != e.u && w != e.v && g.adjacent(e.u, w) && g.adjacent(e.v, w)) {
                ++on_edge;
            }
        }
        incidences += on_edge;
        if (on_edge != 1 && out.holds) {
            out.holds = false;
            out.counterexample = e; // edges are sorted: first offender is least
        }
    }
    out.triangle_count = BigInt(incidences) / 3; // every triangle shows on 3 edges
    return out;
}

DiamondFreeBound diamond_free_bound(const UGraph& g, const Rational& eps) {
    if (eps <= 0) {
        throw DomainError("diamond_free_bound requires eps > 0");
    }
    UniqueTriangles unique = unique_triangles_check(g);
    if (!unique.holds) {
        throw DomainError("diamond_free_bound requires every edge on exactly one triangle");
    }
    DiamondFreeBound out;
    out.edge_count = BigInt(g.edge_count());
    out.triangle_count = unique.triangle_count;
    out.identity_holds = out.edge_count == 3 * out.triangle_count;
    const BigInt n(g.vertex_count());
    out.budget = eps * Rational(n * n);
    out.within_budget = Rational(out.edge_count) <= out.budget;
    return out;
}

RothAudit roth_audit(std::uint64_t n, const Rational& eps, std::uint64_t n_cap) {
    if (n == 0) {
        throw DomainError("roth_audit requires N >= 1");
    }
    if (n > n_cap || n >= 63) {
        throw CapError("roth_audit walks 2^N subsets; N exceeds the cap");
    }
    if (eps <= 0) {
        throw DomainError("roth_audit requires eps > 0");
    }
    RothAudit audit;
    audit.n = n;
    audit.eps = eps;
    audit.eps_times_n = eps * Rational(BigInt(n));
    audit.all_ok = true;

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::uint64_t> a;
        for (std::uint64_t v = 0; v < n; ++v) {
            if (mask & (std::uint64_t{1} << v)) {
                a.push_back(v);
            }
        }
        ++audit.subsets_checked;
        if (find_progression3(a).has_value()) {
            continue;
        }
        ++audit.ap_free_count;
        RothInstance inst = build_roth_graph(n, a); // construction re-checks |E| = 3M|A|
        UniqueTriangles unique = unique_triangles_check(inst.graph);
        const std::uint64_t expect = inst.m * inst.a.size();
        if (!unique.holds || unique.triangle_count != expect ||
            inst.graph.edge_count() != 3 * expect) {
            audit.all_ok = false;
        }
        if (a.size() > audit.max_ap_free_size ||
            (a.size() == audit.max_ap_free_size && a < audit.max_witness)) {
            audit.max_ap_free_size = a.size();
            audit.max_witness = a;
        }
    }
    return audit;
}

} // namespace regkit
