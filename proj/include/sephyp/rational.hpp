#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sephyp/error.hpp"

namespace sephyp {

/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

/// Parses "p" or "p/q" with decimal integers; q must be nonzero. Result is canonical.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    require(is_decimal_integer(num) && is_decimal_integer(den) && den.front() != '-' && den.front() != '+',
            errc::invalid_input, "not a rational: '" + std::string(text) + "'");
    Integer p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer q(std::string(den), 10);
    require(q != 0, errc::invalid_input, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
    return r.get_str(10);
}

} // namespace sephyp
