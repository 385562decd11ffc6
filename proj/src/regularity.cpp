#include "regkit/regularity.hpp"

#include "regkit/errors.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace regkit {

namespace {

// Subset of x selected by the bits of mask.
VertexSet subset_from_mask(const VertexSet& x, std::uint64_t mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
            vs.push_back(x[i]);
        }
    }
    return VertexSet(std::move(vs));
}

// First b entries of a degree-ordered index list, mapped back to vertices of y.
VertexSet prefix_set(const VertexSet& y, const std::vector<std::uint32_t>& order, std::size_t b) {
    std::vector<Vertex> vs;
    vs.reserve(b);
    for (std::size_t i = 0; i < b; ++i) {
        vs.push_back(y[order[i]]);
    }
    return VertexSet(std::move(vs));
}

} // namespace

RegularityOutcome check_regular_pair(const VertexSet& x, const VertexSet& y, const UGraph& g,
                                     const Rational& eps, std::size_t size_cap) {
    if (eps <= 0) {
        throw DomainError("regularity check requires eps > 0");
    }
    if (eps >= 1) {
        return {}; // all deviations lie in [0, 1], so none can exceed eps
    }
    if (x.size() > size_cap || y.size() > size_cap) {
        throw CapError("pair too large for the exact regularity check (cap " +
                       std::to_string(size_cap) + ")");
    }
    if (x.size() > 25 || y.size() > 25) {
        // 2^|X| states; beyond this the scan cannot finish in reasonable time
        // and the word-sized counting below would need revisiting.
        throw CapError("pair exceeds the hard ceiling of 25 for the exact check");
    }
    if (x.empty() || y.empty()) {
        return {}; // every eligible (A, B) has density 0 = d(X, Y)
    }

    const std::size_t nx = x.size();
    const std::size_t ny = y.size();
    const BigInt p = numerator(eps);
    const BigInt q = denominator(eps);

    // Least subset sizes satisfying |A| >= eps|X|, |B| >= eps|Y|. Both are >= 1
    // and <= the side size because 0 < eps < 1 here.
    const std::size_t amin = static_cast<std::size_t>(ceil_div(p * nx, q));
    const std::size_t bmin = static_cast<std::size_t>(ceil_div(p * ny, q));

    std::uint64_t e0 = 0; // e(X, Y), ordered pairs
    std::vector<std::vector<std::uint32_t>> adj_in_y(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (g.adjacent(x[i], y[j])) {
                adj_in_y[i].push_back(static_cast<std::uint32_t>(j));
                ++e0;
            }
        }
    }
    const std::uint64_t n0 = static_cast<std::uint64_t>(nx) * ny;

    // Cross-multiplied violation test |D| * q > p * (a*b*n0) in 128 bits when
    // eps is word-sized; exact either way.
    const bool small_eps = (p <= BigInt(UINT64_MAX)) && (q <= BigInt(UINT64_MAX));
    const std::uint64_t p64 = small_eps ? static_cast<std::uint64_t>(p) : 0;
    const std::uint64_t q64 = small_eps ? static_cast<std::uint64_t>(q) : 0;
    auto violates = [&](std::uint64_t abs_d, std::uint64_t abn0) {
        if (small_eps) {
            return static_cast<unsigned __int128>(abs_d) * q64 >
                   static_cast<unsigned __int128>(p64) * abn0;
        }
        return BigInt(abs_d) * q > p * BigInt(abn0);
    };

    bool found = false;
    std::uint64_t best_abs_d = 0;
    std::uint64_t best_ab = 1;
    VertexSet best_a, best_b;

    std::vector<std::uint32_t> deg(ny, 0);           // degree of each y-index into A
    std::vector<std::uint32_t> cnt(nx + 2, 0);       // degree histogram scratch
    std::vector<std::uint32_t> start(nx + 2, 0);     // counting-sort offsets
    std::vector<std::uint32_t> order_hi(ny), order_lo(ny);

    std::uint64_t cur = 0; // Gray-coded A mask
    std::size_t a = 0;
    const std::uint64_t states = std::uint64_t{1} << nx;
    for (std::uint64_t t = 1; t < states; ++t) {
        const unsigned flip = static_cast<unsigned>(std::countr_zero(t));
        const std::uint64_t bit = std::uint64_t{1} << flip;
        cur ^= bit;
        const bool added = (cur & bit) != 0;
        a += added ? 1 : std::size_t(-1);
        for (std::uint32_t j : adj_in_y[flip]) {
            deg[j] += added ? 1 : std::uint32_t(-1);
        }
        if (a < amin) {
            continue;
        }

        // Order Y by degree into A, both directions, ties by ascending index.
        std::fill(cnt.begin(), cnt.begin() + (a + 1), 0);
        for (std::size_t j = 0; j < ny; ++j) {
            ++cnt[deg[j]];
        }
        std::uint32_t acc = 0;
        for (std::size_t d = a + 1; d-- > 0;) { // offsets for descending degree
            start[d] = acc;
            acc += cnt[d];
        }
        for (std::uint32_t j = 0; j < ny; ++j) {
            order_hi[start[deg[j]]++] = j;
        }
        acc = 0;
        for (std::size_t d = 0; d <= a; ++d) { // offsets for ascending degree
            start[d] = acc;
            acc += cnt[d];
        }
        for (std::uint32_t j = 0; j < ny; ++j) {
            order_lo[start[deg[j]]++] = j;
        }

        std::uint64_t e_hi = 0, e_lo = 0;
        for (std::size_t b = 1; b <= ny; ++b) {
            e_hi += deg[order_hi[b - 1]];
            e_lo += deg[order_lo[b - 1]];
            if (b < bmin) {
                continue;
            }
            const std::uint64_t ab = static_cast<std::uint64_t>(a) * b;
            for (int side = 0; side < 2; ++side) {
                const std::uint64_t e = side == 0 ? e_hi : e_lo;
                const std::int64_t d_num = static_cast<std::int64_t>(e * n0) -
                                           static_cast<std::int64_t>(e0 * ab);
                const std::uint64_t abs_d = static_cast<std::uint64_t>(d_num < 0 ? -d_num : d_num);
                if (abs_d == 0 || !violates(abs_d, ab * n0)) {
                    continue;
                }
                // Deviations compare as |D|/(ab*n0); n0 cancels.
                const bool better = !found || abs_d * best_ab > best_abs_d * ab;
                const bool tie = found && abs_d * best_ab == best_abs_d * ab;
                if (!better && !tie) {
                    continue;
                }
                VertexSet cand_a = subset_from_mask(x, cur);
                VertexSet cand_b = prefix_set(y, side == 0 ? order_hi : order_lo, b);
                if (tie) {
                    if (!(cand_a < best_a || (cand_a == best_a && cand_b < best_b))) {
                        continue;
                    }
                }
                found = true;
                best_abs_d = abs_d;
                best_ab = ab;
                best_a = std::move(cand_a);
                best_b = std::move(cand_b);
            }
        }
    }

    if (!found) {
        return {};
    }
    RegularityOutcome out;
    out.regular = false;
    out.witness = IrregularityWitness{std::move(best_a), std::move(best_b),
                                      Rational(BigInt(best_abs_d), BigInt(best_ab) * n0)};
    return out;
}

} // namespace regkit
