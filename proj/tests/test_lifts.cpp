#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smf/arith.hpp"
#include "smf/errors.hpp"
#include "smf/lifts.hpp"

using namespace smf;

namespace {

FormalSMF lift_of(const QSeries& f, const QSeries& g, long k, std::int64_t X)
{
    const std::int64_t n = jacobi_nmax_for(X);
    return maass_lift(skoruppa_I(f.truncated(static_cast<std::size_t>(n + 1)), g.truncated(static_cast<std::size_t>(n + 1)), k, n), k, X);
}

}  // namespace

TEST_CASE("Eisenstein series of degree two")
{
    const FormalSMF E4 = eisenstein2(4, 60);
    CHECK(E4.at({0, 0, 0}).scalar_value() == 1);
    CHECK(E4.at({0, 0, 1}).scalar_value() == 240);
    CHECK(E4.at({1, 1, 1}).scalar_value() == 13440);
    CHECK(E4.at({1, 0, 1}).scalar_value() == 30240);
    for (int k : {4, 6, 8, 10}) {
        const FormalSMF E = eisenstein2(k, 40);
        CHECK(phi(E) == eisenstein1(k, phi(E).precision()));
        std::mt19937_64 rng(k);
        CHECK(audit_equivariance(E, rng).ok);
    }
    CHECK_THROWS_AS(eisenstein2(5, 10), Error);
}

TEST_CASE("Maass lifts")
{
    const std::int64_t X = 60;
    const std::size_t n = static_cast<std::size_t>(jacobi_nmax_for(X) + 1);
    const QSeries zero = QSeries::zero(n);
    const FormalSMF L4 = lift_of(eisenstein1(4, n), zero, 4, X);
    CHECK(normalize_at(L4, {0, 0, 0}) == eisenstein2(4, X));
    const FormalSMF L6 = lift_of(eisenstein1(6, n), zero, 6, X);
    CHECK(normalize_at(L6, {0, 0, 0}) == eisenstein2(6, X));
    // singular part proportional to the elliptic Eisenstein series
    const QSeries p = phi(L6);
    CHECK(p * (1 / p[0]) == eisenstein1(6, p.precision()));

    const FormalSMF chi10 = lift_of(zero, delta(n), 10, X);
    CHECK(chi10.character() == Character::One);
    CHECK(phi(chi10).is_zero());
    const JacobiIdx1 J = skoruppa_I(zero, delta(n), 10, jacobi_nmax_for(X));
    CHECK(chi10.at({1, 1, 1}).scalar_value() == J.d(1, 1));
    CHECK(chi10.at({2, 2, 2}).scalar_value() == J.d(4, 2) + 512 * J.d(1, 1));
    std::mt19937_64 rng(1);
    CHECK(audit_equivariance(chi10, rng).ok);
    CHECK_THROWS_AS(maass_lift(J, 10, 4 * jacobi_nmax_for(X) + 1), Error);
    // odd weight gives a det form
    CHECK(maass_lift(J, 11, 20).character() == Character::Det);
}
