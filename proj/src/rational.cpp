#include "smf/rational.hpp"

#include "smf/errors.hpp"

#include <cctype>

namespace smf {

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1) {
        return x.get_num().get_str();
    }
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

bool valid_integer_text(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den)) {
        fail("ParseError", "not a rational: '" + std::string(text) + "'");
    }
    Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
    Integer d(std::string(den[0] == '+' ? den.substr(1) : den));
    if (d == 0) {
        fail("ParseError", "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Integer power(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational power(const Rational& base, long exponent)
{
    if (exponent >= 0) {
        Rational r(power(Integer(base.get_num()), static_cast<unsigned long>(exponent)),
                   power(Integer(base.get_den()), static_cast<unsigned long>(exponent)));
        r.canonicalize();
        return r;
    }
    if (sgn(base) == 0) {
        fail("DivisionByZero", "negative power of zero");
    }
    Rational inv = 1 / base;
    return power(inv, -exponent);
}

}  // namespace smf
