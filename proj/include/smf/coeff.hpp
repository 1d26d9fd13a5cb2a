#pragma once

// Characters of GL(2,Z), homogeneous polynomials under (A, p) -> p((X,Y)A),
// and coefficient values (scalar, polynomial, or group-ring over the
// characters).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smf/quadform.hpp"
#include "smf/rational.hpp"

namespace smf {

// det^e_det * sigma^e_sigma, stored as e_det + 2 e_sigma.
enum class Character : std::uint8_t { One = 0, Det = 1, Sigma = 2, DetSigma = 3 };

inline Character operator*(Character x, Character y)
{
    return static_cast<Character>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}
inline int char_index(Character x) { return static_cast<int>(x); }
inline Character char_from_index(int i) { return static_cast<Character>(i & 3); }
inline Character det_power(long k) { return (k % 2 != 0) ? Character::Det : Character::One; }

std::string to_string(Character x);
Character parse_character(std::string_view s);

// Sign of A mod 2 permuting the nonzero column vectors of F_2^2.
int sigma_char(const UnimodMat& A);
int char_eval(Character x, const UnimodMat& A);

// Coefficients of X^j, X^(j-1)Y, ..., Y^j.
class HomPoly {
public:
    HomPoly() : c_(1) {}
    explicit HomPoly(int degree) : c_(static_cast<std::size_t>(degree) + 1) {}
    explicit HomPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly operator*(const Rational& s) const;
    bool operator==(const HomPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
};

std::string to_string(const HomPoly& p);

// Matrix of p -> p((X,Y)A) on degree-j monomials; A need not be unimodular.
// Entry (i, m) is the coefficient of monomial m in the image of monomial i.
class SymPower {
public:
    SymPower(const UnimodMat& A, int j);
    int degree() const { return j_; }
    const Integer& at(int i, int m) const { return m_[static_cast<std::size_t>(i * (j_ + 1) + m)]; }
    bool is_identity() const { return identity_; }
    // out must not alias in; both have j+1 entries.
    void apply(const Rational* in, Rational* out) const;

private:
    int j_;
    bool identity_;
    std::vector<Integer> m_;
};

HomPoly act_poly(const UnimodMat& A, const HomPoly& p);

// Coefficient module: group-ring values carry one polynomial per character.
struct Module {
    int j = 0;
    bool group_ring = false;

    int parts() const { return group_ring ? 4 : 1; }
    int width() const { return parts() * (j + 1); }
    friend bool operator==(const Module&, const Module&) = default;

    static Module scalar() { return {0, false}; }
    static Module poly(int j) { return {j, false}; }
};

std::string to_string(const Module& m);
// Throws ModuleMismatch unless both or neither are group-ring valued.
Module product_module(const Module& x, const Module& y);

struct CoeffValue {
    Module mod;
    std::vector<Rational> v;  // parts * (j+1), part-major

    CoeffValue() : v(1) {}
    explicit CoeffValue(Module m) : mod(m), v(static_cast<std::size_t>(m.width())) {}
    static CoeffValue scalar(const Rational& x);
    static CoeffValue poly(const HomPoly& p);

    bool is_zero() const;
    const Rational& scalar_value() const { return v[0]; }
    HomPoly component(Character x = Character::One) const;

    CoeffValue operator+(const CoeffValue& o) const;
    CoeffValue operator-(const CoeffValue& o) const;
    CoeffValue operator*(const Rational& s) const;
    bool operator==(const CoeffValue& o) const { return mod == o.mod && v == o.v; }
};

CoeffValue operator*(const CoeffValue& x, const CoeffValue& y);
std::string to_string(const CoeffValue& x);

// out += x * y, for values stored flat in modules mx, my (out in product module).
void mul_accumulate(const Module& mx, const Rational* x, const Module& my, const Rational* y,
                    Rational* out);

// In-place chi(A) * (A acting on value). For group-ring values chi is ignored and
// each component is twisted by its own character.
void act_value(const UnimodMat& A, Character chi, const Module& m, Rational* data);
CoeffValue act_value(const UnimodMat& A, Character chi, const CoeffValue& x);

}  // namespace smf
