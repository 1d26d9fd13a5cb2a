#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "smf/errors.hpp"
#include "smf/lifts.hpp"
#include "smf/theta.hpp"

using namespace smf;

namespace {

std::string error_name(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

std::vector<BinQF> psd_box(std::int64_t A, std::int64_t C)
{
    std::vector<BinQF> out;
    for (std::int64_t a = 0; a <= A; ++a)
        for (std::int64_t c = 0; c <= C; ++c) {
            const std::int64_t r = isqrt(4 * a * c);
            for (std::int64_t b = -r; b <= r; ++b) out.push_back({a, b, c});
        }
    return out;
}

std::set<std::vector<std::int64_t>> as_set(const std::vector<std::vector<std::int64_t>>& v)
{
    return {v.begin(), v.end()};
}

Lattice a1_4() { return Lattice(4, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2}); }

std::vector<QI> gaussian(std::initializer_list<std::pair<int, int>> v)
{
    std::vector<QI> out;
    for (auto [r, i] : v) out.emplace_back(Rational(r), Rational(i));
    return out;
}

}  // namespace

TEST_CASE("lattices")
{
    CHECK(lattice_e8().determinant() == 1);
    CHECK(lattice_e6().determinant() == 3);
    CHECK(lattice_d4().determinant() == 4);
    CHECK(lattice_a2().determinant() == 3);
    CHECK(lattice_e6_star().determinant() == 243);
    CHECK(lattice_s4().determinant() == 9);
    CHECK(error_name([] { Lattice(1, {3}); }) == "InvalidLattice");
    CHECK(error_name([] { Lattice(2, {2, 1, 0, 2}); }) == "InvalidLattice");
    CHECK(error_name([] { Lattice(2, {2, 3, 3, 2}); }) == "InvalidLattice");
}

TEST_CASE("short vectors")
{
    const Lattice a1(1, {2});
    auto V = short_vectors(a1, 1);
    CHECK(as_set(V[1]) == std::set<std::vector<std::int64_t>>{{1}, {-1}});
    CHECK(V[0].size() == 1);
    CHECK(short_vectors(lattice_e8(), 2)[1].size() == 240);
    CHECK(short_vectors(lattice_e8(), 2)[2].size() == 2160);
    CHECK(short_vectors_half(lattice_e8(), 1)[1].size() == 120);

    for (const Lattice& L : {lattice_a1a1(), lattice_a2(), lattice_d4(), lattice_s4(), a1_4()}) {
        const std::int64_t t = 9;
        const auto W = short_vectors(L, t);
        const auto box = oracle::box_vectors(L, t);
        for (std::int64_t s = 0; s <= t; ++s) {
            std::vector<std::vector<std::int64_t>> ref;
            for (const auto& v : box)
                if (L.q(v.data()) == s) ref.push_back(v);
            CHECK(as_set(W[s]) == as_set(ref));
            CHECK(W[s].size() == ref.size());
        }
    }
}

TEST_CASE("theta series")
{
    const FormalSMF T = theta_series(lattice_z2_scaled(), 20);
    CHECK(T.at({0, 0, 0}).scalar_value() == 1);
    CHECK(T.at({0, 0, 1}).scalar_value() == 4);
    CHECK(T.at({1, 0, 1}).scalar_value() == 8);
    CHECK(T.coefficient({1, 2, 1}).scalar_value() == 4);
    CHECK(T.weight() == Weight::of(1));

    for (const Lattice& L : {lattice_a1a1(), lattice_a2(), lattice_d4()}) {
        const FormalSMF F = theta_series(L, 20);
        for (std::size_t i = 0; i < F.size(); ++i)
            CHECK(F.data(i)[0] == Rational(Integer(static_cast<long>(oracle::theta_pairs(L, F.key(i))))));
        // non-reduced forms against the pair count directly
        for (const auto& f : psd_box(3, 3))
            if (within_precision(f, 20))
                CHECK(F.coefficient(f).scalar_value() == Rational(Integer(static_cast<long>(oracle::theta_pairs(L, f)))));
        std::mt19937_64 rng(5);
        CHECK(audit_equivariance(F, rng).ok);
    }

    const FormalSMF E = theta_series(lattice_e8(), 40);
    CHECK(E.at({0, 0, 1}).scalar_value() == 240);
    CHECK(E == eisenstein2(4, 40));
}

TEST_CASE("theta constants")
{
    const RawFourier t0 = theta_constant_raw({0, 0, 0, 0}, 16, 16);
    CHECK(t0.coefficient({0, 0, 0}).scalar_value() == 1);
    CHECK(t0.coefficient({0, 0, 4}).scalar_value() == 2);
    CHECK(t0.coefficient({0, 0, 1}).scalar_value() == 0);
    const RawFourier t1 = theta_constant_raw({0, 0, 1, 0}, 16, 16);
    CHECK(t1.coefficient({4, 0, 0}).scalar_value() == -2);
    CHECK(error_name([] { theta_constant_raw({0, 1, 1, 1}, 4, 4); }) == "ZeroConstant");
    CHECK(error_name([] { theta_product({{1, {{1, 0, 1, 0}}}}, 4, 4); }) == "OddPairing");

    // a single constant is formal only in symmetric combinations
    const std::int64_t X = 64;
    const std::int64_t A = promote_box_a(X), C = promote_box_c(X);
    CHECK_NOTHROW(promote(theta_constant_raw({0, 0, 0, 0}, A, C), X));
    CHECK(error_name([&] { promote(theta_constant_raw({0, 0, 1, 0}, A, C), X); }) == "NotEquivariant");
    const RawFourier sym = theta_constant_raw({0, 0, 1, 0}, A, C) + theta_constant_raw({0, 0, 0, 1}, A, C) +
                           theta_constant_raw({0, 0, 1, 1}, A, C);
    CHECK_NOTHROW(promote(sym, X));

    // level N with b = 0 counts l = a mod N
    const RawFourier l3 = theta_constant_raw_level(3, {1, 0, 0, 0}, 9, 9);
    CHECK(l3.coefficient({1, 0, 0}).scalar_value() == 1);
    CHECK(l3.coefficient({4, 0, 0}).scalar_value() == 1);
    CHECK(l3.coefficient({1, 6, 9}).scalar_value() == 1);
    CHECK(l3.coefficient({1, -6, 9}).scalar_value() == 1);
    CHECK(l3.coefficient({1, 2, 1}).scalar_value() == 0);
    CHECK(error_name([] { theta_constant_raw_level(3, {1, 0, 1, 0}, 9, 9); }) == "IrrationalCoefficient");
    const RawFourier l2 = theta_constant_raw_level(2, {0, 0, 1, 0}, 16, 16);
    CHECK(l2.entries() == t1.entries());
}

TEST_CASE("theta products")
{
    const ThetaChar t00{0, 0, 0, 0}, t01{0, 0, 0, 1}, t10{0, 0, 1, 0}, t11{0, 0, 1, 1};
    const std::vector<ThetaTerm> Y{{1, {t00, t01, t10, t11, t00, t01, t10, t11}}};
    const std::vector<ThetaTerm> mixed{{make_rational(1, 4), {t00, t00, t00, t00}},
                                       {make_rational(1, 4), {t01, t01, t01, t01}},
                                       {-3, {ThetaChar{0, 1, 0, 0}, ThetaChar{0, 1, 1, 0}, t11}}};

    CHECK(theta_product({{1, {t00, t00}}}, 4, 4).coefficient({0, 0, 0}).scalar_value() == 1);
    CHECK(theta_product({{1, {t10}}}, 16, 16).entries() == theta_constant_raw(t10, 16, 16).entries());

    for (const auto* terms : {&Y, &mixed}) {
        const RawFourier full = theta_product(*terms, 24, 24);
        const std::vector<BinQF> targets = psd_box(12, 12);
        const RawFourier at = theta_product_at(*terms, targets);
        for (const auto& f : targets) {
            CHECK(at.coefficient(f) == full.coefficient(f));
            if (f.a <= 8 && f.c <= 8) CHECK(full.coefficient(f).scalar_value() == theta_product_literal(*terms, f));
        }
        for (const BinQF& f : {BinQF{24, 7, 20}, BinQF{16, 16, 16}, BinQF{20, -3, 24}})
            CHECK(theta_product_at(*terms, {f}).coefficient(f) == full.coefficient(f));
    }

    const FormalSMF YF = theta_product_form(Y, 8, 20, Weight::of(4));
    CHECK(YF.character() == Character::One);
    CHECK_FALSE(YF.is_zero());
    std::mt19937_64 rng(2);
    CHECK(audit_equivariance(YF, rng).ok);
}

TEST_CASE("vector-valued theta series")
{
    // P = 1 reproduces the scalar theta series
    const Lattice Z2 = lattice_a1a1();
    const Pluriharmonic one = make_P_a(Z2, gaussian({{1, 0}, {0, 1}}), 0);
    const VVTheta t = vv_theta(Z2, one, 20);
    CHECK(t.im.is_zero());
    for (std::size_t i = 0; i < t.re.size(); ++i) CHECK(t.re.data(i)[0] == theta_series(Z2, 20).data(i)[0]);

    CHECK(error_name([&] { make_P_a(Z2, gaussian({{1, 0}, {1, 0}}), 2); }) == "NotIsotropic");

    // odd total degree cancels between (x, y) and (-x, -y)
    const Pluriharmonic odd = make_P_a(Z2, gaussian({{1, 0}, {0, 1}}), 3);
    const VVTheta to = vv_theta(Z2, odd, 20);
    CHECK(to.re.is_zero());
    CHECK(to.im.is_zero());

    // swapping x and y mirrors the coefficients
    const Pluriharmonic P2 = make_P_a(Z2, gaussian({{1, 0}, {0, 1}}), 4);
    const std::int64_t x[2] = {1, 2}, y[2] = {-3, 1};
    const auto pxy = P2.eval(x, y), pyx = P2.eval(y, x);
    for (int i = 0; i <= 4; ++i) CHECK(pxy[i] == pyx[4 - i]);

    const Lattice L4 = a1_4();
    const Pluriharmonic Pab = make_P_ab(L4, gaussian({{1, 0}, {1, 0}, {0, 1}, {0, 1}}),
                                        gaussian({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 4, 2);
    const VVTheta tab = vv_theta(L4, Pab, 16);
    CHECK(tab.re.character() == Character::One);
    CHECK(tab.re.weight() == Weight::of(4, 4));
    CHECK_FALSE((tab.re.is_zero() && tab.im.is_zero()));
    std::mt19937_64 rng(9);
    for (const FormalSMF* F : {&tab.re, &tab.im}) CHECK(audit_equivariance(*F, rng).ok);
    for (const auto& f : psd_box(3, 3)) {
        if (!within_precision(f, 16)) continue;
        const auto d = vv_theta_direct(L4, Pab, f);
        std::vector<Rational> re, im;
        for (const auto& z : d) {
            re.push_back(z.re);
            im.push_back(z.im);
        }
        CHECK(tab.re.coefficient(f) == CoeffValue::poly(HomPoly(re)));
        CHECK(tab.im.coefficient(f) == CoeffValue::poly(HomPoly(im)));
    }

    // E8 with two orthogonal pairs of roots
    const Lattice E8 = lattice_e8();
    const auto roots = short_vectors(E8, 1)[1];
    std::vector<std::vector<std::int64_t>> frame{roots[0]};
    for (const auto& r : roots) {
        bool ok = frame.size() < 4;
        for (const auto& s : frame) ok = ok && E8.pairing(r.data(), s.data()) == 0;
        if (ok) frame.push_back(r);
    }
    REQUIRE(frame.size() == 4);
    std::vector<QI> a(8), b(8);
    for (int i = 0; i < 8; ++i) {
        a[i] = QI(Rational(frame[0][i]), Rational(frame[1][i]));
        b[i] = QI(Rational(frame[2][i]), Rational(frame[3][i]));
    }
    const Pluriharmonic Pe = make_P_ab(E8, a, b, 2, 1);
    const VVTheta te = vv_theta(E8, Pe, 12);
    CHECK(te.re.character() == Character::Det);
    CHECK(te.re.weight() == Weight::of(5, 2));
    for (const FormalSMF* F : {&te.re, &te.im}) CHECK(audit_equivariance(*F, rng).ok);
}

TEST_CASE("gamma4")
{
    const FormalSMF G = gamma4(30);
    CHECK(G.at({0, 0, 0}).scalar_value() == 0);
    for (std::int64_t c = 0; c <= 7; ++c) CHECK(G.at({0, 0, c}).scalar_value() == 0);
    CHECK_FALSE(G.is_zero());
    std::mt19937_64 rng(4);
    CHECK(audit_equivariance(G, rng).ok);
    for (const auto& f : psd_box(3, 4))
        if (within_precision(f, 30)) CHECK(G.coefficient(f).scalar_value() == gamma4_direct(f));
}
