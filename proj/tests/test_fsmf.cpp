#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smf/errors.hpp"
#include "smf/fsmf.hpp"
#include "oracles.hpp"

using namespace smf;

namespace {

bool has_improper_automorph(const BinQF& f) { return f.a == 0 || f.b == 0 || f.b == f.a || f.a == f.c; }

// Random scalar form; det-forms vanish where an improper automorph forces it.
FormalSMF random_form(std::mt19937_64& rng, std::int64_t X, Character chi)
{
    std::uniform_int_distribution<int> v(-20, 20);
    FormalSMF F(X, chi, Module::scalar());
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (chi == Character::Det && has_improper_automorph(F.key(i))) continue;
        *F.data(i) = make_rational(v(rng), 1 + (v(rng) + 20) % 3);
    }
    return F;
}

}  // namespace

TEST_CASE("coefficient lookup through equivariance")
{
    FormalSMF F(30, Character::Det, Module::scalar());
    F.set({2, 1, 3}, Rational(5));
    CHECK(F.coefficient({2, -1, 3}).scalar_value() == -5);
    CHECK(F.coefficient({3, 1, 2}).scalar_value() == -5);
    CHECK(F.coefficient({3, -1, 2}).scalar_value() == 5);
    CHECK(F.coefficient({2, 1, 1}).scalar_value() == F.coefficient({2, -1, 1}).scalar_value() * -1);
    CHECK_THROWS_AS(F.coefficient({3, 0, 3}), Error);
    CHECK_THROWS_AS(F.coefficient({1, 3, 1}), Error);
    const FormalSMF one = FormalSMF::one(20);
    CHECK(one.coefficient({0, 0, 0}).scalar_value() == 1);
    CHECK(one.coefficient({0, 0, 1}).scalar_value() == 0);
}

TEST_CASE("addition rules")
{
    std::mt19937_64 rng(1);
    const FormalSMF F = random_form(rng, 40, Character::One);
    const FormalSMF zero(40, Character::One, Module::scalar());
    CHECK(add(F, zero) == F);
    CHECK(add(F, scale(F, -1)).is_zero());
    const FormalSMF D = random_form(rng, 40, Character::Det);
    CHECK_FALSE(D.is_zero());
    CHECK_THROWS_AS(add(F, D), Error);
    const FormalSMF G = add(embed(F), embed(D));
    CHECK(G.module().group_ring);
    CHECK(component(G, Character::One) == F);
    CHECK(component(G, Character::Det) == D);
    CHECK(component(G, Character::Sigma).is_zero());
    std::mt19937_64 arng(3);
    CHECK(audit_equivariance(G, arng).ok);
}

TEST_CASE("multiplication against the dense convolution oracle")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 6; ++trial) {
        const Character c1 = trial % 2 ? Character::Det : Character::One;
        const Character c2 = trial % 3 ? Character::One : Character::Det;
        const FormalSMF F = random_form(rng, 30, c1), G = random_form(rng, 24, c2);
        const FormalSMF P = mul(F, G);
        CHECK(P.precision() == 24);
        CHECK(P.character() == c1 * c2);
        const std::int64_t A = P.index().max_a(), C = P.index().max_c();
        const DenseTable TF(F, A, C, false), TG(G, A, C, false);
        for (std::size_t i = 0; i < P.size(); ++i) CHECK(*P.data(i) == oracle::convolve(TF, TG, P.key(i)));
        // the product is equivariant at non-reduced indices as well
        const DenseTable TP(P, 2, 3, false);
        for (const auto& f : TP.forms()) CHECK(*TP.get(f) == oracle::convolve(TF, TG, f));
        std::mt19937_64 arng(trial);
        CHECK(audit_equivariance(P, arng).ok);
    }
}

TEST_CASE("ring laws and the unit")
{
    std::mt19937_64 rng(4);
    const FormalSMF one = FormalSMF::one(20);
    for (int t = 0; t < 3; ++t) {
        const FormalSMF F = random_form(rng, 20, Character::One), G = random_form(rng, 20, Character::Det),
                        H = random_form(rng, 20, Character::One);
        CHECK(mul(one, F) == F);
        CHECK(mul(F, G) == mul(G, F));
        CHECK(mul(mul(F, G), H) == mul(F, mul(G, H)));
        CHECK(phi(mul(F, H)) == phi(F) * phi(H));
    }
}

TEST_CASE("index rescaling")
{
    std::mt19937_64 rng(5);
    const FormalSMF F = random_form(rng, 60, Character::One);
    CHECK(scale_index(F, 1) == F);
    CHECK(scale_index(FormalSMF::one(40), 2) == FormalSMF::one(10));
    const FormalSMF S = scale_index(F, 2);
    CHECK(S.precision() == 15);
    CHECK(S.at({1, 1, 1}) == F.at({2, 2, 2}));
    const FormalSMF U = unscale_index(S, 2);
    CHECK(U.precision() >= 15);
    CHECK(scale_index(U, 2) == S.truncated(U.precision() / 4));
    CHECK(U.truncated(15).at({1, 1, 1}).is_zero());
    CHECK(contract_index(U, 2) == S.truncated(U.precision() / 4));
    CHECK_THROWS_AS(contract_index(F, 2), Error);
    CHECK(scale_index(scale_index(F, 2), 2) == scale_index(F, 4));
}

TEST_CASE("phi and dense boxes")
{
    CHECK(phi(FormalSMF::one(12)) == QSeries::constant(1, 4));
    std::mt19937_64 rng(6);
    const FormalSMF D = random_form(rng, 40, Character::Det);
    const DenseTable T = expand_box(D, 2, 3);
    for (const auto& f : T.forms()) CHECK(*T.get(f) == -*T.get({f.a, -f.b, f.c}));
    CHECK_THROWS_AS(expand_box(D, 5, 5), Error);
    const DenseTable one = expand_box(FormalSMF::one(4), 1, 1);
    int nonzero = 0;
    for (const auto& f : one.forms()) nonzero += *one.get(f) != 0;
    CHECK(nonzero == 1);
}

TEST_CASE("promotion of raw data")
{
    const std::int64_t X = 40;
    RawFourier zero(promote_box_a(X), promote_box_c(X));
    const FormalSMF Z = promote(zero, X);
    CHECK(Z.character() == Character::One);
    CHECK(Z.is_zero());
    // raw data of an equivariant det form
    std::mt19937_64 rng(7);
    const FormalSMF D = random_form(rng, 200, Character::Det);
    RawFourier raw(promote_box_a(X), promote_box_c(X));
    for (std::int64_t a = 0; a <= raw.max_a(); ++a)
        for (std::int64_t c = 0; c <= raw.max_c(); ++c)
            for (std::int64_t b = -isqrt(4 * a * c); b <= isqrt(4 * a * c); ++b)
                if (within_precision({a, b, c}, 200)) raw.add_to({a, b, c}, D.coefficient({a, b, c}));
    const FormalSMF P = promote(raw, X);
    CHECK(P.character() == Character::Det);
    CHECK(P == D.truncated(X));
    // break one value off the reduced keys
    raw.add_to({2, 1, 4}, Rational(1));
    CHECK_THROWS_AS(promote(raw, X), Error);
}

TEST_CASE("stabilizer audit detects inconsistent data")
{
    FormalSMF F(20, Character::Det, Module::scalar());
    F.set({1, 0, 1}, Rational(1));
    std::mt19937_64 rng(8);
    CHECK_FALSE(audit_equivariance(F, rng).ok);
}
