#include "regkit/srl.hpp"

#include "regkit/energy.hpp"
#include "regkit/errors.hpp"

#include <stdexcept>
#include <utility>

namespace regkit {

namespace {

// Shared analysis of one partition: outcome of the exact pair check for every
// unordered part pair (checked once; the definition is symmetric), plus the
// irregular mass.
struct PairScan {
    std::vector<std::vector<RegularityOutcome>> upper; // upper[i][j - i] for j >= i
    Rational defect;
    Rational budget;
    bool regular = false;

    const RegularityOutcome& at(std::size_t i, std::size_t j) const {
        return i <= j ? upper[i][j - i] : upper[j][i - j];
    }
};

PairScan scan_pairs(const Rational& eps, const UGraph& g, const VertexPartition& p,
                    std::size_t size_cap) {
    if (eps <= 0) {
        throw DomainError("partition regularity requires eps > 0");
    }
    if (g.vertex_count() == 0) {
        throw DomainError("partition regularity needs a graph with at least one vertex");
    }
    if (p.ground() != g.vertices()) {
        throw DomainError("partition is not over the graph's vertices");
    }
    const std::size_t k = p.size();
    PairScan scan;
    scan.upper.resize(k);
    BigInt defect = 0;
    for (std::size_t i = 0; i < k; ++i) {
        scan.upper[i].reserve(k - i);
        for (std::size_t j = i; j < k; ++j) {
            RegularityOutcome out = check_regular_pair(p.part(i), p.part(j), g, eps, size_cap);
            if (!out.regular) {
                BigInt mass = BigInt(p.part(i).size()) * BigInt(p.part(j).size());
                defect += i == j ? mass : 2 * mass; // ordered pairs: both orientations
            }
            scan.upper[i].push_back(std::move(out));
        }
    }
    const BigInt n(g.vertex_count());
    scan.defect = Rational(defect);
    scan.budget = eps * Rational(n * n);
    scan.regular = scan.defect <= scan.budget;
    return scan;
}

VertexPartition refine_from_scan(const UGraph& g, const VertexPartition& p, const PairScan& scan) {
    const std::size_t k = p.size();
    std::vector<std::vector<VertexPartition>> splits(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            const RegularityOutcome& out = scan.at(i, j);
            if (out.regular) {
                continue;
            }
            const IrregularityWitness& w = *out.witness;
            splits[i].emplace_back(p.part(i), binary_split(w.a, p.part(i)));
            splits[j].emplace_back(p.part(j), binary_split(w.b, p.part(j)));
        }
    }
    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < k; ++i) {
        if (splits[i].empty()) {
            parts.push_back(p.part(i));
            continue;
        }
        VertexPartition refined = common_refinement(p.part(i), splits[i]);
        for (const VertexSet& piece : refined.parts()) {
            parts.push_back(piece);
        }
    }
    return VertexPartition(g.vertices(), std::move(parts));
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> irregular_pairs(const Rational& eps,
                                                                 const UGraph& g,
                                                                 const VertexPartition& p,
                                                                 std::size_t size_cap) {
    PairScan scan = scan_pairs(eps, g, p, size_cap);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!scan.at(i, j).regular) {
                out.emplace_back(i, j);
            }
        }
    }
    return out; // loop order is already lexicographic
}

PartitionRegularity is_regular_partition(const Rational& eps, const UGraph& g,
                                         const VertexPartition& p, std::size_t size_cap) {
    PairScan scan = scan_pairs(eps, g, p, size_cap);
    return PartitionRegularity{scan.regular, scan.defect, scan.budget};
}

VertexPartition refine_step(const UGraph& g, const VertexPartition& p, const Rational& eps,
                            std::size_t size_cap) {
    PairScan scan = scan_pairs(eps, g, p, size_cap);
    if (scan.regular) {
        throw DomainError("refine_step: the partition is already eps-regular");
    }
    return refine_from_scan(g, p, scan);
}

SrlResult szemeredi_partition(const UGraph& g, const Rational& eps,
                              std::optional<VertexPartition> initial, std::size_t size_cap) {
    if (eps <= 0) {
        throw DomainError("szemeredi_partition requires eps > 0");
    }
    if (g.vertex_count() == 0) {
        throw DomainError("szemeredi_partition needs a graph with at least one vertex");
    }
    VertexPartition current =
        initial.has_value() ? std::move(*initial) : VertexPartition::trivial(g.vertices());
    if (current.ground() != g.vertices()) {
        throw DomainError("initial partition is not over the graph's vertices");
    }

    SrlResult result;
    result.part_bound = tower_bound(eps);
    const BigInt max_rounds = ceil_inv_pow5(eps);
    result.energy_trajectory.push_back(mean_square_density(g, current));

    while (true) {
        PairScan scan = scan_pairs(eps, g, current, size_cap);
        if (scan.regular) {
            result.final_defect = scan.defect;
            break;
        }
        if (BigInt(result.iterations) >= max_rounds) {
            // Each round provably gains more than eps^5 of energy inside [0, 1],
            // so this cannot happen.
            throw std::logic_error("refinement budget exhausted without certification");
        }
        current = refine_from_scan(g, current, scan);
        ++result.iterations;
        result.energy_trajectory.push_back(mean_square_density(g, current));
    }
    result.partition = std::move(current);
    result.certified = true;
    return result;
}

} // namespace regkit
