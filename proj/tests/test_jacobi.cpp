#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smf/errors.hpp"
#include "smf/jacobi.hpp"

using namespace smf;

TEST_CASE("A and B agree with the literal double sums")
{
    for (std::int64_t n = 0; n <= 6; ++n) {
        CHECK(jacobi_A(n) == jacobi_A_direct(n));
        CHECK(jacobi_B(n) == jacobi_B_direct(n));
    }
    const LaurentQZ B = jacobi_B(3);
    // B = zeta^-1 - 2 + zeta up to sign at q^0
    CHECK(B.get(0, 0) == 2);
    CHECK(B.get(0, 1) == -1);
    CHECK(B.get(0, -1) == -1);
    const LaurentQZ A = jacobi_A(3);
    CHECK(A.get(0, 0) == 2);
    CHECK(A.get(0, 1) == 0);
    for (std::int64_t n = 0; n <= 3; ++n)
        for (std::int64_t r = -LaurentQZ::rbound(n); r <= LaurentQZ::rbound(n); ++r) {
            CHECK(A.get(n, r) == A.get(n, -r));
            CHECK(B.get(n, r) == B.get(n, -r));
        }
}

TEST_CASE("the map I")
{
    const std::int64_t nmax = 12;
    const QSeries e4 = eisenstein1(4, nmax + 1), e6 = eisenstein1(6, nmax + 1), d = delta(nmax + 1);
    const JacobiIdx1 J = skoruppa_I(e4, QSeries::zero(nmax + 1), 4, nmax);
    CHECK(J.d(0, 0) == 4);
    CHECK(J.d(0, 1) == 0);
    for (std::int64_t n = 0; n <= 5; ++n)
        for (std::int64_t r = -4; r <= 4; ++r) CHECK(J.d(n, r) == J.d(n, -r));
    // I(0, Delta) = Delta B
    const LaurentQZ L = skoruppa_I_laurent(QSeries::zero(nmax + 1), d, 10, nmax);
    CHECK(L == jacobi_B(nmax).times(d));
    const JacobiIdx1 K = recollect(L, 10);
    CHECK(K.d(0, 0) == 0);
    CHECK(K.d(1, 1) == L.get(1, 1));
    CHECK(K.d(1, 1) == -1);
    CHECK(K.d(1, 0) == 2);
    // linearity in f
    const LaurentQZ a = skoruppa_I_laurent(e4 * e6, QSeries::zero(nmax + 1), 10, nmax);
    const LaurentQZ b = skoruppa_I_laurent(e4 * e6 * Rational(3), d, 10, nmax);
    CHECK(skoruppa_I_laurent(e4 * e6 * Rational(4), d, 10, nmax) == a + b);
    // weak data violates the index law
    CHECK_THROWS_AS(recollect(jacobi_B(4), -2), Error);
    CHECK_THROWS_AS(J.d(20, 0), Error);
}
