#pragma once

#include "regkit/graph.hpp"
#include "regkit/rational.hpp"

#include <cstddef>
#include <optional>

namespace regkit {

// Certificate that (X, Y) is not eps-regular: subsets A of X and B of Y
// (not necessarily proper) with |A| >= eps|X|, |B| >= eps|Y| and
// |d(A,B) - d(X,Y)| > eps.
struct IrregularityWitness {
    VertexSet a;
    VertexSet b;
    Rational deviation; // |d(A,B) - d(X,Y)|, exact
};

struct RegularityOutcome {
    bool regular = true;
    std::optional<IrregularityWitness> witness; // present exactly when !regular
};

// Ceiling on |X| and |Y| for the exact check: the scan walks all 2^|X| subsets.
inline constexpr std::size_t kPairSizeCap = 22;

// Exact eps-regularity of (X, Y) in g.
//
// The scan enumerates every A with |A| >= eps|X| (Gray-code order, degrees
// into A maintained incrementally) but on the B side inspects only the
// extremal candidates: with Y sorted by degree into A, the top-b and bottom-b
// prefixes attain the maximum and minimum of e(A, B) over |B| = b, since
// e(A, B) is the sum of the chosen degrees. A violating pair of a given shape
// exists iff an extremal one does, so the verdict (and the maximum deviation)
// is exact while only |Y| sizes per A are touched.
//
// All comparisons are exact: 64/128-bit cross-multiplication when eps fits in
// 64-bit words, arbitrary precision otherwise. The witness is deterministic:
// maximum deviation, ties broken by the lexicographically least (A, B) among
// the extremal candidates.
//
// eps >= 1 is trivially regular (densities live in [0, 1]). Throws DomainError
// when eps <= 0, CapError when a side exceeds size_cap.
RegularityOutcome check_regular_pair(const VertexSet& x, const VertexSet& y, const UGraph& g,
                                     const Rational& eps, std::size_t size_cap = kPairSizeCap);

} // namespace regkit
