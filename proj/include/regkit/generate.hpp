#pragma once

#include "regkit/graph.hpp"
#include "regkit/rational.hpp"

#include <cstdint>

namespace regkit {

UGraph complete_graph(std::uint64_t n);

// Parts {0..a-1}, {a..a+b-1}, {a+b..a+b+c-1}; every cross pair is an edge,
// nothing inside a part.
UGraph complete_tripartite(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// The half graph: sides {0..n-1} and {n..2n-1}, edge {i, n+j} iff i <= j.
// The classic source of irregular pairs.
UGraph bipartite_half(std::uint64_t n);

// G(n, p) sampled with an exact rational p in [0, 1]. Candidate edges are
// visited in lexicographic order and each Bernoulli draw is unbiased, so a
// fixed (n, p, seed) always yields the same graph.
UGraph random_graph(std::uint64_t n, const Rational& p, std::uint64_t seed);

} // namespace regkit
