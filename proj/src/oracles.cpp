#include "regkit/oracles.hpp"

#include "regkit/errors.hpp"

#include <algorithm>

namespace regkit {

namespace {

VertexSet mask_subset(const VertexSet& base, std::uint64_t mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
            vs.push_back(base[i]);
        }
    }
    return VertexSet(std::move(vs));
}

bool edge_listed(const UGraph& g, Vertex a, Vertex b) {
    if (a == b) {
        return false;
    }
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    return std::binary_search(g.edges().begin(), g.edges().end(), e);
}

// e(A, B) as ordered pairs, straight from the definition.
std::uint64_t brute_pair_count(const VertexSet& a, const VertexSet& b, const UGraph& g) {
    std::uint64_t count = 0;
    for (Vertex p : a) {
        for (Vertex q : b) {
            if (edge_listed(g, p, q)) {
                ++count;
            }
        }
    }
    return count;
}

Rational brute_density(const VertexSet& a, const VertexSet& b, const UGraph& g) {
    if (a.empty() || b.empty()) {
        return Rational(0);
    }
    return Rational(BigInt(brute_pair_count(a, b, g)), BigInt(a.size()) * BigInt(b.size()));
}

} // namespace

RegularityOutcome brute_regular_pair(const VertexSet& x, const VertexSet& y, const UGraph& g,
                                     const Rational& eps, bool strict, const OracleConfig& cfg) {
    if (eps <= 0) {
        throw DomainError("brute_regular_pair requires eps > 0");
    }
    if (x.size() > cfg.subset_cap || y.size() > cfg.subset_cap) {
        throw CapError("brute_regular_pair: side exceeds the oracle subset cap");
    }
    const Rational d0 = brute_density(x, y, g);
    const Rational ex(BigInt(x.size()));
    const Rational ey(BigInt(y.size()));

    bool found = false;
    Rational best_dev(0);
    VertexSet best_a, best_b;
    const std::uint64_t amasks = std::uint64_t{1} << x.size();
    const std::uint64_t bmasks = std::uint64_t{1} << y.size();
    for (std::uint64_t am = 0; am < amasks; ++am) {
        VertexSet a = mask_subset(x, am);
        if (strict && a == x) {
            continue;
        }
        if (Rational(BigInt(a.size())) < eps * ex) {
            continue;
        }
        for (std::uint64_t bm = 0; bm < bmasks; ++bm) {
            VertexSet b = mask_subset(y, bm);
            if (strict && b == y) {
                continue;
            }
            if (Rational(BigInt(b.size())) < eps * ey) {
                continue;
            }
            Rational dev = brute_density(a, b, g) - d0;
            if (dev < 0) {
                dev = -dev;
            }
            if (dev <= eps) {
                continue;
            }
            const bool better = !found || dev > best_dev;
            const bool tie =
                found && dev == best_dev && (a < best_a || (a == best_a && b < best_b));
            if (better || tie) {
                found = true;
                best_dev = dev;
                best_a = a;
                best_b = b;
            }
        }
    }
    if (!found) {
        return {};
    }
    RegularityOutcome out;
    out.regular = false;
    out.witness = IrregularityWitness{std::move(best_a), std::move(best_b), std::move(best_dev)};
    return out;
}

void for_each_partition(const VertexSet& v, const std::function<void(const VertexPartition&)>& fn,
                        const OracleConfig& cfg) {
    if (v.size() > cfg.partition_cap) {
        throw CapError("for_each_partition: ground set exceeds the oracle partition cap");
    }
    const std::size_t n = v.size();
    if (n == 0) {
        fn(VertexPartition());
        return;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<std::size_t> a(n, 0);
    while (true) {
        std::size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<Vertex>> buckets(blocks);
        for (std::size_t i = 0; i < n; ++i) {
            buckets[a[i]].push_back(v[i]);
        }
        std::vector<VertexSet> parts;
        parts.reserve(blocks);
        for (auto& bucket : buckets) {
            parts.emplace_back(std::move(bucket));
        }
        fn(VertexPartition(v, std::move(parts)));

        std::size_t i = n;
        while (i-- > 1) {
            std::size_t prefix_max = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= prefix_max) {
                ++a[i];
                std::fill(a.begin() + i + 1, a.end(), 0);
                break;
            }
            if (i == 1) {
                return; // every string visited
            }
        }
        if (n == 1) {
            return;
        }
    }
}

std::vector<VertexPartition> all_partitions(const VertexSet& v, const OracleConfig& cfg) {
    std::vector<VertexPartition> out;
    for_each_partition(v, [&](const VertexPartition& p) { out.push_back(p); }, cfg);
    return out;
}

std::vector<Triangle> brute_triangles(const UGraph& g) {
    if (g.vertex_count() > 64) {
        throw CapError("brute_triangles: graph exceeds the oracle vertex cap of 64");
    }
    std::vector<Triangle> out;
    const auto& vs = g.vertices().items();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!edge_listed(g, vs[i], vs[j])) {
                continue;
            }
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                if (edge_listed(g, vs[i], vs[k]) && edge_listed(g, vs[j], vs[k])) {
                    out.push_back({vs[i], vs[j], vs[k]});
                }
            }
        }
    }
    return out;
}

namespace {

void ap_free_search(std::uint64_t next, std::uint64_t n, std::vector<std::uint64_t>& chosen,
                    std::vector<bool>& member, ApFreeExtremum& best) {
    if (next == n) {
        if (chosen.size() > best.size ||
            (chosen.size() == best.size && chosen < best.witness)) {
            best.size = chosen.size();
            best.witness = chosen;
        }
        return;
    }
    if (chosen.size() + (n - next) < best.size) {
        return; // cannot even tie the incumbent
    }
    // Take `next` if it closes no progression (it would always be the largest
    // element, so only (2b - next, b, next) patterns can appear).
    bool closes = false;
    for (std::uint64_t b : chosen) {
        if (2 * b >= next && 2 * b - next != b && member[2 * b - next]) {
            closes = true;
            break;
        }
    }
    if (!closes) {
        chosen.push_back(next);
        member[next] = true;
        ap_free_search(next + 1, n, chosen, member, best);
        member[next] = false;
        chosen.pop_back();
    }
    ap_free_search(next + 1, n, chosen, member, best);
}

} // namespace

ApFreeExtremum max_ap_free(std::uint64_t n, const OracleConfig& cfg) {
    if (n > cfg.ap_cap) {
        throw CapError("max_ap_free: N exceeds the oracle cap");
    }
    ApFreeExtremum best;
    std::vector<std::uint64_t> chosen;
    std::vector<bool> member(n, false);
    if (n == 0) {
        return best;
    }
    ap_free_search(0, n, chosen, member, best);
    return best;
}

} // namespace regkit
