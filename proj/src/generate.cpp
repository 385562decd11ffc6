#include "regkit/generate.hpp"

#include "regkit/errors.hpp"

#include <random>
#include <vector>

namespace regkit {

UGraph complete_graph(std::uint64_t n) {
    std::vector<Edge> edges;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
            edges.push_back(Edge{i, j});
        }
    }
    return UGraph(VertexSet::range(n), std::move(edges));
}

UGraph complete_tripartite(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    const std::uint64_t n = a + b + c;
    auto part_of = [&](std::uint64_t v) { return v < a ? 0 : (v < a + b ? 1 : 2); };
    std::vector<Edge> edges;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
            if (part_of(i) != part_of(j)) {
                edges.push_back(Edge{i, j});
            }
        }
    }
    return UGraph(VertexSet::range(n), std::move(edges));
}

UGraph bipartite_half(std::uint64_t n) {
    std::vector<Edge> edges;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i; j < n; ++j) {
            edges.push_back(Edge{i, n + j});
        }
    }
    return UGraph(VertexSet::range(2 * n), std::move(edges));
}

namespace {

// Uniform integer in [0, bound) for an arbitrary-precision bound, by rejection
// on fixed-width words. Unbiased, so the exact acceptance probability num/den
// is honoured.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 1) {
        return 0;
    }
    const std::size_t bits = msb(bound - 1) + 1;
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - (words - 1) * 64;
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
    while (true) {
        BigInt value = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = rng();
            if (w + 1 == words) {
                word &= top_mask;
            }
            value <<= 64;
            value |= BigInt(word);
        }
        if (value < bound) {
            return value;
        }
    }
}

} // namespace

UGraph random_graph(std::uint64_t n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) {
        throw DomainError("edge probability must lie in [0, 1]");
    }
    const BigInt num = numerator(p);
    const BigInt den = denominator(p);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
            if (num == 0) {
                continue;
            }
            if (num == den || uniform_below(rng, den) < num) {
                edges.push_back(Edge{i, j});
            }
        }
    }
    return UGraph(VertexSet::range(n), std::move(edges));
}

} // namespace regkit
