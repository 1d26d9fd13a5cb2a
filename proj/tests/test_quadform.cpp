#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "smf/errors.hpp"
#include "smf/quadform.hpp"

using namespace smf;

TEST_CASE("discriminant, psd, content")
{
    CHECK(disc({1, 1, 1}) == -3);
    CHECK(disc({0, 0, 0}) == 0);
    CHECK(disc({1, 0, 1}) == -4);
    CHECK(is_psd({1, 1, 1}));
    CHECK_FALSE(is_psd({1, 3, 1}));
    CHECK_FALSE(is_psd({-1, 0, 0}));
    CHECK(content({2, 4, 6}) == 2);
    CHECK(content({1, 1, 1}) == 1);
    CHECK(content({0, 0, 0}) == 0);
}

TEST_CASE("action")
{
    CHECK(act(UnimodMat::T(), {1, 0, 1}) == BinQF{2, 2, 1});
    CHECK(act(UnimodMat::identity(), {3, -2, 7}) == BinQF{3, -2, 7});
    CHECK(act(UnimodMat::E(), {3, -2, 7}) == BinQF{3, 2, 7});
    CHECK(act(UnimodMat::S(), {1, 1, 2}) == BinQF{2, -1, 1});
    // left action: (AB).f = A.(B.f)
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> g(0, 2);
    const UnimodMat gens[3] = {UnimodMat::S(), UnimodMat::T(), UnimodMat::E()};
    for (int i = 0; i < 200; ++i) {
        UnimodMat A = gens[g(rng)] * gens[g(rng)], B = gens[g(rng)] * gens[g(rng)] * gens[g(rng)];
        const BinQF f{2, 1, 5};
        CHECK(act(A * B, f) == act(A, act(B, f)));
    }
    CHECK_THROWS_AS(act(UnimodMat{3037000500, 0, 0, 1}, BinQF{3, 0, 0}), Error);
}

TEST_CASE("reduction examples")
{
    auto r = reduce({2, 2, 1});
    CHECK(r.form == BinQF{1, 0, 1});
    CHECK(act(r.transform, r.form) == BinQF{2, 2, 1});
    r = reduce({1, 1, 1});
    CHECK(r.form == BinQF{1, 1, 1});
    CHECK(r.transform == UnimodMat::identity());
    r = reduce({1, -1, 1});
    CHECK(r.form == BinQF{1, 1, 1});
    CHECK(r.transform == UnimodMat::E());
    r = reduce({0, 0, 0});
    CHECK(r.form == BinQF{0, 0, 0});
    CHECK(r.transform == UnimodMat::identity());
    r = reduce({4, 4, 1});
    CHECK(r.form == BinQF{0, 0, 1});
    CHECK(act(r.transform, r.form) == BinQF{4, 4, 1});
    r = reduce({5, 0, 0});
    CHECK(r.form == BinQF{0, 0, 5});
    CHECK_THROWS_AS(reduce({1, 3, 1}), Error);
}

TEST_CASE("reduction is an orbit invariant")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> g(0, 2);
    const UnimodMat gens[3] = {UnimodMat::S(), UnimodMat::T(), UnimodMat::E()};
    for (int a = 0; a <= 6; ++a)
        for (int c = 0; c <= 6; ++c)
            for (int b = -12; b <= 12; ++b) {
                const BinQF f{a, b, c};
                if (!is_psd(f)) continue;
                const auto r = reduce(f);
                CHECK(is_reduced(r.form));
                CHECK(act(r.transform, r.form) == f);
                CHECK(std::abs(r.transform.det()) == 1);
                CHECK(reduce(r.form).form == r.form);
                UnimodMat A = UnimodMat::identity();
                for (int t = 0; t < 5; ++t) A = A * gens[g(rng)];
                const BinQF h = act(A, f);
                CHECK(disc(h) == disc(f));
                CHECK(content(h) == content(f));
                CHECK(reduce(h).form == r.form);
            }
}

TEST_CASE("reduced forms below a discriminant bound")
{
    CHECK(reduced_forms_below(4) == std::vector<BinQF>{{0, 0, 0}, {0, 0, 1}, {1, 1, 1}, {1, 0, 1}});
    const auto f12 = reduced_forms_below(12);
    CHECK(f12.size() == 11);
    const std::set<BinQF> s12(f12.begin(), f12.end());
    for (BinQF f : {BinQF{0, 0, 0}, BinQF{0, 0, 1}, BinQF{0, 0, 2}, BinQF{0, 0, 3}, BinQF{1, 0, 1},
                    BinQF{1, 1, 1}, BinQF{1, 0, 2}, BinQF{1, 1, 2}, BinQF{1, 0, 3}, BinQF{1, 1, 3},
                    BinQF{2, 2, 2}})
        CHECK(s12.count(f) == 1);
    CHECK(reduced_forms_below(1) == std::vector<BinQF>{{0, 0, 0}});
}

TEST_CASE("brute-force canonical forms agree with the enumeration")
{
    for (std::int64_t X = 1; X <= 40; ++X) {
        std::set<BinQF> seen;
        for (std::int64_t a = 0; a <= X; ++a)
            for (std::int64_t c = 0; c <= X; ++c)
                for (std::int64_t b = -2 * X; b <= 2 * X; ++b) {
                    const BinQF f{a, b, c};
                    if (!is_psd(f)) continue;
                    const BinQF g = reduce(f).form;
                    if (within_precision(g, X)) seen.insert(g);
                }
        const auto list = reduced_forms_below(X);
        CHECK(std::set<BinQF>(list.begin(), list.end()) == seen);
        CHECK(list.size() == seen.size());
    }
}

TEST_CASE("summand pairs")
{
    auto p = summand_pairs({0, 0, 1});
    CHECK(p.size() == 2);
    CHECK(summand_pairs({0, 0, 0}).size() == 1);
    // only [0,0,0]+[1,1,1] and [1,1,1]+[0,0,0]: every other split leaves an indefinite part
    CHECK(summand_pairs({1, 1, 1}).size() == 2);
    CHECK(summand_pairs({1, 0, 1}).size() == 4);
    for (std::int64_t X = 1; X <= 20; ++X)
        for (const auto& f : reduced_forms_below(X)) {
            std::size_t naive = 0;
            for (std::int64_t a1 = 0; a1 <= f.a; ++a1)
                for (std::int64_t c1 = 0; c1 <= f.c; ++c1)
                    for (std::int64_t b1 = -4 * (f.a + f.c) - 1; b1 <= 4 * (f.a + f.c) + 1; ++b1) {
                        const BinQF f1{a1, b1, c1};
                        if (is_psd(f1) && is_psd(f - f1)) ++naive;
                    }
            const auto pairs = summand_pairs(f);
            CHECK(pairs.size() == naive);
            for (const auto& [f1, f2] : pairs) {
                CHECK(is_psd(f1));
                CHECK(is_psd(f2));
                CHECK(f1 + f2 == f);
                // no summand escapes the precision of the sum
                CHECK(within_precision(f1, X));
            }
        }
}
