#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace smf {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text form: "n" for integers, "n/d" in lowest terms otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts "n" or "n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned long exponent);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

}  // namespace smf
