#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace milnum {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Canonical decimal form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string to_string(const Rational& value);

/// Parses "a" or "a/b" with optional leading sign. Throws Error(invalid_argument).
Rational parse_rational(std::string_view text);

Integer factorial(unsigned k);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace milnum
