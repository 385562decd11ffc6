#include "regkit/tower.hpp"

#include "regkit/errors.hpp"

namespace regkit {

TowerBound tower_bound(const Rational& eps, std::uint64_t digit_limit) {
    if (eps <= 0) {
        throw DomainError("tower_bound requires eps > 0");
    }
    TowerBound out;
    out.rounds = ceil_inv_pow5(eps);
    out.digit_limit = digit_limit;
    out.value = 1;
    out.steps_done = 0;

    const BigInt ten_pow = pow(BigInt(10), static_cast<unsigned>(digit_limit));
    // v -> v * 2^(v+1) needs a shift by v+1 bits; once v outnumbers the bits a
    // digit_limit-digit value can hold (~3.33 per digit), the next value is
    // certainly over the limit.
    const BigInt max_shift = BigInt(4) * digit_limit + 64;
    while (out.steps_done < out.rounds) {
        if (out.value > max_shift) {
            return out; // next step cannot fit
        }
        const std::uint64_t shift = static_cast<std::uint64_t>(out.value) + 1;
        BigInt next = out.value << shift;
        if (next >= ten_pow) {
            return out; // computed but over the digit budget; stay at value
        }
        out.value = next;
        ++out.steps_done;
    }
    out.exact = true;
    return out;
}

bool tower_leq(const TowerBound& a, const TowerBound& b) {
    return a.rounds <= b.rounds;
}

bool tower_at_least(const TowerBound& b, const BigInt& n) {
    if (b.exact) {
        return n <= b.value;
    }
    // The true bound exceeded 10^digit_limit; any smaller n is safely below it.
    return n < pow(BigInt(10), static_cast<unsigned>(b.digit_limit));
}

namespace {

BigInt two_to(std::uint64_t e) {
    return BigInt(1) << e;
}

} // namespace

bool le_tower_check(std::uint64_t k) {
    if (k > 26) {
        throw CapError("le_tower_check: 2^(2^k) does not fit in memory past k = 26");
    }
    BigInt lhs = BigInt(k) << (k + 1);
    BigInt rhs = two_to(std::uint64_t{1} << k);
    return lhs <= rhs;
}

bool le_tower_check_wrong_variant(std::uint64_t k) {
    if (k > 26) {
        throw CapError("le_tower_check_wrong_variant: 2^(2^k) does not fit in memory past k = 26");
    }
    BigInt lhs = BigInt(k) << (2 * k);
    BigInt rhs = two_to(std::uint64_t{1} << k);
    return lhs <= rhs;
}

} // namespace regkit
