#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace regkit {

// Every density, energy, and threshold in this library is an exact rational;
// no floating point is used anywhere in the decision paths.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den, except that a zero denominator yields 0. This is the convention
// used by edge densities of empty sets.
Rational ratio_or_zero(const BigInt& num, const BigInt& den);

// Accepts "p/q", a plain integer, or a decimal such as "0.25" (read exactly,
// denominator a power of ten). Leading/trailing blanks are ignored; anything
// else throws DomainError.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

// r^k by repeated multiplication; k is always tiny here.
Rational rational_pow(const Rational& r, unsigned k);

// ceil(a/b) for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// ceil(eps^-5): the refinement budget attached to a positive eps.
BigInt ceil_inv_pow5(const Rational& eps);

} // namespace regkit
