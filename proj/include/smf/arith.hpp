#pragma once

// Elementary arithmetic: divisor sums, Bernoulli numbers, Kronecker symbols,
// Dirichlet L-values at non-positive integers and Cohen's function H.

#include <cstdint>
#include <utility>
#include <vector>

#include "smf/rational.hpp"

namespace smf {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
int moebius(std::int64_t n);
Integer sigma(long k, std::int64_t n);
bool is_prime(std::int64_t n);

// B_n with B_1 = -1/2.
const Rational& bernoulli(int n);
Rational bernoulli_poly(int m, const Rational& x);
Integer binomial(long n, long k);

int kronecker(std::int64_t D, std::int64_t n);
bool is_fundamental(std::int64_t D);
// D = D0 f^2 with D0 fundamental (D = 0 or 1 mod 4, D != 0).
std::pair<std::int64_t, std::int64_t> fundamental_split(std::int64_t D);

// L(1-m, chi_D0); D0 = 1 gives zeta(1-m).
Rational dirichlet_L_neg(std::int64_t D0, int m);
Rational zeta_neg(int m);  // zeta(1-m)

Rational cohen_H(int r, std::int64_t N);

}  // namespace smf
