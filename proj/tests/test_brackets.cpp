#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "smf/brackets.hpp"
#include "smf/errors.hpp"
#include "smf/lifts.hpp"

using namespace smf;

namespace {

FormalSMF lift_of(const QSeries& f, const QSeries& g, long k, std::int64_t X)
{
    const std::int64_t n = jacobi_nmax_for(X);
    const auto m = static_cast<std::size_t>(n + 1);
    return maass_lift(skoruppa_I(f.truncated(m), g.truncated(m), k, n), k, X);
}

struct Level1 {
    FormalSMF E4, E6, chi10, chi12;
};

Level1 level1(std::int64_t X)
{
    const std::size_t n = static_cast<std::size_t>(jacobi_nmax_for(X) + 1);
    const QSeries zero = QSeries::zero(n);
    Level1 g{eisenstein2(4, X), eisenstein2(6, X), normalize_at(lift_of(zero, delta(n), 10, X), {1, 1, 1}),
             normalize_at(lift_of(delta(n), zero, 12, X), {1, 1, 1})};
    return g;
}

Rational det4(std::array<std::array<Rational, 4>, 4> m)
{
    Rational d = 1;
    for (int c = 0; c < 4; ++c) {
        int p = c;
        while (p < 4 && m[p][c] == 0) ++p;
        if (p == 4) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < 4; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (int j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return d;
}

Rational naive_wronskian(const std::array<const FormalSMF*, 4>& F, const BinQF& f)
{
    Rational s = 0;
    for_each_summand(f, [&](const BinQF& T1, const BinQF& R1) {
        const Rational c1 = F[0]->coefficient(T1).scalar_value();
        if (c1 == 0) return;
        for_each_summand(R1, [&](const BinQF& T2, const BinQF& R2) {
            const Rational c2 = F[1]->coefficient(T2).scalar_value();
            if (c2 == 0) return;
            for_each_summand(R2, [&](const BinQF& T3, const BinQF& T4) {
                const Rational c = c1 * c2 * F[2]->coefficient(T3).scalar_value() * F[3]->coefficient(T4).scalar_value();
                if (c == 0) return;
                std::array<std::array<Rational, 4>, 4> m;
                const BinQF T[4] = {T1, T2, T3, T4};
                for (int i = 0; i < 4; ++i) {
                    m[0][i] = F[i]->weight().k;
                    m[1][i] = T[i].a;
                    m[2][i] = T[i].b;
                    m[3][i] = T[i].c;
                }
                s += c * det4(m);
            });
        });
    });
    return s;
}

}  // namespace

TEST_CASE("dZ")
{
    const FormalSMF E4 = eisenstein2(4, 20);
    const FormalSMF D = dZ(E4);
    CHECK(D.at({0, 0, 0}).is_zero());
    CHECK(D.at({0, 0, 1}) == CoeffValue::poly(HomPoly(std::vector<Rational>{0, 0, 240})));
    CHECK(D.at({1, 1, 1}) == CoeffValue::poly(HomPoly(std::vector<Rational>{13440, 13440, 13440})));
    CHECK(D.character() == Character::One);
    std::mt19937_64 rng(3);
    CHECK(audit_equivariance(D, rng).ok);
    CHECK(audit_equivariance(dZZ(E4), rng).ok);
    CHECK_THROWS_AS(dZ(D), Error);
}

TEST_CASE("Satoh bracket")
{
    const Level1 g = level1(30);
    CHECK(satoh_bracket(g.E4, g.E4).is_zero());
    const FormalSMF B = satoh_bracket(g.E4, g.E6);
    CHECK(B.at({0, 0, 0}).is_zero());
    CHECK(B.at({0, 0, 1}) == CoeffValue::poly(HomPoly(std::vector<Rational>{0, 0, 144})));
    CHECK(B.weight() == Weight::of(10, 2));
    std::mt19937_64 rng(1);
    CHECK(audit_equivariance(B, rng).ok);
    CHECK(audit_equivariance(satoh_bracket(g.E6, g.chi10), rng).ok);
    FormalSMF noweight = g.E4;
    noweight.set_weight({});
    CHECK_THROWS_AS(satoh_bracket(noweight, g.E6), Error);
}

TEST_CASE("Sym4 bracket")
{
    const Level1 g = level1(30);
    const FormalSMF B = ibukiyama_sym4(g.E4, g.E6);
    CHECK(B.at({0, 0, 0}).is_zero());
    // at [0,0,1] only the constant terms pair with [0,0,1]:
    // 21 * 1 * 240 Y^4 + 10 * 1 * (-504) Y^4
    CHECK(B.at({0, 0, 1}) == CoeffValue::poly(HomPoly(std::vector<Rational>{0, 0, 0, 0, 21 * 240 - 10 * 504})));
    CHECK(B.weight() == Weight::of(10, 4));
    std::mt19937_64 rng(2);
    CHECK(audit_equivariance(B, rng).ok);
    CHECK(audit_equivariance(ibukiyama_sym4(g.chi10, g.E4), rng).ok);
    try {
        ibukiyama_sym4(lift_of(QSeries::zero(8), delta(8), 11, 12), g.E4);
        FAIL("odd first weight accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.name()) == "OddFirstWeight");
    }
}

TEST_CASE("Wronskian")
{
    const Level1 g = level1(24);
    const FormalSMF W = wronskian(g.E4, g.E6, g.chi10, g.chi12);
    CHECK(W.character() == Character::Det);
    CHECK(W.weight() == Weight::of(35));
    CHECK_FALSE(W.is_zero());
    CHECK(phi(W).is_zero());
    for (std::size_t i = 0; i < W.size(); ++i) {
        const BinQF f = W.key(i);
        if (f.b == 0 || f.b == f.a) CHECK(W.data(i)[0] == 0);
    }
    CHECK(wronskian(g.E4, g.E6, g.chi10, g.chi12, true) == W);
    std::mt19937_64 rng(7);
    CHECK(audit_equivariance(W, rng).ok);

    CHECK(wronskian(g.E4, g.E4, g.chi10, g.chi12).is_zero());
    CHECK(wronskian(g.E4, g.E6, g.chi10, g.E6).is_zero());

    // against the literal quadruple sum with the 4x4 determinant
    const FormalSMF E8 = eisenstein2(8, 24);
    for (const auto& F : {std::array<const FormalSMF*, 4>{&g.E4, &g.E6, &g.chi10, &g.chi12},
                          std::array<const FormalSMF*, 4>{&g.E4, &g.E6, &E8, &g.chi10}}) {
        const FormalSMF V = wronskian(*F[0], *F[1], *F[2], *F[3]);
        for (const BinQF& f : {BinQF{2, 1, 3}, BinQF{3, 1, 3}, BinQF{2, 1, 4}, BinQF{3, 2, 4}, BinQF{1, 1, 5}})
            if (within_precision(f, 24)) CHECK(V.at(f).scalar_value() == naive_wronskian(F, f));
    }
}
