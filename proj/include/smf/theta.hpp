#pragma once

// Degree-2 theta series of lattices, theta constants with characteristics and
// their products, pluriharmonic vector-valued theta series, and gamma_4.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "smf/fsmf.hpp"

namespace smf {

class Lattice {
public:
    // Gram matrix, row-major; must be symmetric, positive definite, even diagonal.
    Lattice(int n, std::vector<std::int64_t> gram);

    int rank() const { return n_; }
    std::int64_t gram(int i, int j) const { return G_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<std::int64_t>& gram() const { return G_; }
    // q(v) = v^t G v / 2
    std::int64_t q(const std::int64_t* v) const;
    std::int64_t pairing(const std::int64_t* v, const std::int64_t* w) const;  // v^t G w
    Integer determinant() const;

    static Lattice from_file(const std::string& path);

private:
    int n_;
    std::vector<std::int64_t> G_;
};

Lattice lattice_e8();
Lattice lattice_a1a1();
Lattice lattice_a2();
Lattice lattice_d4();
Lattice lattice_e6();
// 3 E6^-1, integral and even.
Lattice lattice_e6_star();
Lattice lattice_z2_scaled();  // diag(2, 2)
// 2 S4, the Gram matrix behind gamma_4.
Lattice lattice_s4();

// Visits one of v, -v for every nonzero v with q(v) <= tmax (the one whose last
// nonzero coordinate is positive), passing q(v).
void for_each_short_vector(const Lattice& L, std::int64_t tmax,
                           const std::function<void(const std::int64_t*, std::int64_t)>& fn);

// Full lists V_t for 0 <= t <= tmax (closed under negation; V_0 = {0}).
std::vector<std::vector<std::vector<std::int64_t>>> short_vectors(const Lattice& L, std::int64_t tmax);
// Half lists: exactly one of v, -v, for 1 <= t <= tmax (index 0 empty).
std::vector<std::vector<std::vector<std::int64_t>>> short_vectors_half(const Lattice& L, std::int64_t tmax);

FormalSMF theta_series(const Lattice& L, std::int64_t X);

// ---------------------------------------------------------- theta constants

// Characteristic (a, b) with entries mod 2 for level 2; a and b are the vectors
// written (a1,a2),(b1,b2).
struct ThetaChar {
    int a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    bool even() const { return (a1 * b1 + a2 * b2) % 2 == 0; }
    std::string name() const;
};

// Coefficients of theta_{a,b}(8Z) on the box a <= A, c <= C.
RawFourier theta_constant_raw(const ThetaChar& ch, std::int64_t A, std::int64_t C);
// Level-N constants theta_{N,a,b}(2 N^2 Z), a and b taken mod N.
RawFourier theta_constant_raw_level(int N, const ThetaChar& ch, std::int64_t A, std::int64_t C);

struct ThetaTerm {
    Rational alpha = 1;
    std::vector<ThetaChar> factors;
};

// sum_i alpha_i prod_j theta_{a_ij, b_ij}(8Z) on the box a <= A, c <= C.
RawFourier theta_product(const std::vector<ThetaTerm>& terms, std::int64_t A, std::int64_t C);
// Same, evaluated only at the listed forms (box chosen to cover them).
RawFourier theta_product_at(const std::vector<ThetaTerm>& terms, const std::vector<BinQF>& targets);
// The defining tuple sum evaluated literally at one form.
Rational theta_product_literal(const std::vector<ThetaTerm>& terms, const BinQF& f);

// The product in the variable (8/d) Z: the 8Z data contracted by d (d | 8),
// promoted at precision X. Support off d Q is checked on a small box.
FormalSMF theta_product_form(const std::vector<ThetaTerm>& terms, std::int64_t d, std::int64_t X, Weight w);

// ------------------------------------------------ vector-valued theta series

// Exact Gaussian rationals as pairs (re, im).
struct QI {
    Rational re = 0, im = 0;
    QI() = default;
    QI(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    QI operator+(const QI& o) const { return {re + o.re, im + o.im}; }
    QI operator-(const QI& o) const { return {re - o.re, im - o.im}; }
    QI operator*(const QI& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    bool operator==(const QI& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

// P_a (b empty) or P_{a,b,k} for a, b isotropic in lattice coordinates, the
// pairing being (u, v) = u^t G v:
//   P_a(x, y)       = ((x,a) X + (y,a) Y)^j
//   P_{a,b,k}(x, y) = det((x,a), (y,a); (x,b), (y,b))^k P_a(x, y)
struct Pluriharmonic {
    int j = 0;
    int k = 0;
    std::vector<QI> Ga;  // G a
    std::vector<QI> Gb;  // G b, empty for P_a

    // Coefficients of X^j, X^(j-1) Y, ..., Y^j at the pairings
    // al = (x,a), be = (y,a), alb = (x,b), beb = (y,b).
    std::vector<QI> at_pairings(const QI& al, const QI& be, const QI& alb, const QI& beb) const;
    std::vector<QI> eval(const std::int64_t* x, const std::int64_t* y) const;
};

// Throws NotIsotropic.
Pluriharmonic make_P_a(const Lattice& L, const std::vector<QI>& a, int j);
Pluriharmonic make_P_ab(const Lattice& L, const std::vector<QI>& a, const std::vector<QI>& b, int j, int k);

// Real and imaginary parts of theta_{L,P}; each is a polynomial-valued formal
// form (both are equivariant since the action is defined over Q).
struct VVTheta {
    FormalSMF re;
    FormalSMF im;
};
VVTheta vv_theta(const Lattice& L, const Pluriharmonic& P, std::int64_t X);

// Direct coefficient of theta_{L,P} at an arbitrary psd form, for audits.
std::vector<QI> vv_theta_direct(const Lattice& L, const Pluriharmonic& P, const BinQF& f);

FormalSMF gamma4(std::int64_t X);
Rational gamma4_direct(const BinQF& f);

}  // namespace smf
