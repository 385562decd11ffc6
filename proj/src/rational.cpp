#include "regkit/rational.hpp"

#include "regkit/errors.hpp"

#include <algorithm>
#include <cctype>

namespace regkit {

Rational ratio_or_zero(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        return Rational(0);
    }
    return Rational(num, den);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt digits_to_int(std::string_view s) {
    return BigInt(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto is_blank = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!text.empty() && is_blank(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_blank(text.back())) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw DomainError("empty rational literal");
    }

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw DomainError("sign with no digits in rational literal");
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw DomainError("malformed fraction: '" + std::string(text) + "'");
        }
        BigInt d = digits_to_int(den);
        if (d == 0) {
            throw DomainError("zero denominator in rational literal");
        }
        value = Rational(digits_to_int(num), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) {
            throw DomainError("malformed decimal: '" + std::string(text) + "'");
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        BigInt num = digits_to_int(whole) * scale + digits_to_int(frac);
        value = Rational(num, scale);
    } else {
        if (!all_digits(text)) {
            throw DomainError("malformed integer: '" + std::string(text) + "'");
        }
        value = Rational(digits_to_int(text));
    }
    if (negative) {
        value = -value;
    }
    return value;
}

std::string rational_str(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& r, unsigned k) {
    Rational acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= r;
    }
    return acc;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) {
        throw DomainError("ceil_div requires a positive divisor");
    }
    BigInt q = a / b; // truncates toward zero
    if (a % b != 0 && a > 0) {
        ++q;
    }
    return q;
}

BigInt ceil_inv_pow5(const Rational& eps) {
    if (eps <= 0) {
        throw DomainError("ceil_inv_pow5 requires eps > 0");
    }
    BigInt p = numerator(eps);
    BigInt q = denominator(eps);
    return ceil_div(q * q * q * q * q, p * p * p * p * p);
}

} // namespace regkit
