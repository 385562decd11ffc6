#pragma once

#include "regkit/rational.hpp"

#include <cstdint>

namespace regkit {

// A-priori ceiling on the number of parts the iterated refinement can
// produce: starting from one part, each round maps a k-part partition to at
// most k * 2^(k+1) parts, and at most ceil(eps^-5) rounds can happen. The
// value is a tower of exponentials, so it is materialized only while it fits
// under digit_limit decimal digits; past that point the bound is reported as
// having overflowed after steps_done rounds. Since the growth map is fixed and
// strictly increasing, the number of rounds alone determines the order of two
// bounds.
struct TowerBound {
    BigInt rounds;              // ceil(eps^-5): rounds requested
    bool exact = false;         // value holds the full bound
    BigInt value;               // bound after steps_done rounds (always materialized)
    BigInt steps_done;          // rounds applied before hitting the digit limit
    std::uint64_t digit_limit = 0;
};

inline constexpr std::uint64_t kTowerDigitLimit = 20000;

TowerBound tower_bound(const Rational& eps, std::uint64_t digit_limit = kTowerDigitLimit);

// Order by the number of rounds; exact for every pair of bounds produced by
// tower_bound, materialized or not.
bool tower_leq(const TowerBound& a, const TowerBound& b);

// Is n <= bound certain? Exact bounds compare directly; an overflowed bound
// dominates any n below 10^digit_limit. Returns false when undecidable.
bool tower_at_least(const TowerBound& b, const BigInt& n);

// One growth step stays under one exponentiation step: k * 2^(k+1) <= 2^(2^k).
// Holds for every k. Throws CapError past k = 26 (the right side stops fitting
// in memory).
bool le_tower_check(std::uint64_t k);

// The tempting tighter claim k * 2^(2k) <= 2^(2^k). Fails at k = 2 (32 > 16),
// which is exactly why the growth map uses the exponent k + 1.
bool le_tower_check_wrong_variant(std::uint64_t k);

} // namespace regkit
