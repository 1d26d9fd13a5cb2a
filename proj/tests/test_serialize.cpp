#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "smf/brackets.hpp"
#include "smf/errors.hpp"
#include "smf/lifts.hpp"
#include "smf/serialize.hpp"
#include "smf/theta.hpp"

using namespace smf;

namespace {

std::string error_name(const std::string& text)
{
    try {
        deserialize(text);
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

}  // namespace

TEST_CASE("format of a small form")
{
    FormalSMF F(4, Character::Det, Module::scalar(), Weight::of(35));
    F.set({1, 1, 1}, make_rational(-3, 4));
    const std::string s = serialize(F);
    CHECK(s ==
          "FSMF 1\n"
          "weight 35 0\n"
          "character det\n"
          "ring rational\n"
          "precision disc 4\n"
          "0 0 0 : 0\n"
          "0 0 1 : 0\n"
          "1 1 1 : -3/4\n"
          "1 0 1 : 0\n");
    CHECK(deserialize(s) == F);
}

TEST_CASE("round trips")
{
    const auto E4 = eisenstein2(4, 40), E6 = eisenstein2(6, 40);
    const FormalSMF br = satoh_bracket(E4, E6);
    const FormalSMF gr = embed(scale(E4, make_rational(1, 3)));
    const FormalSMF half = theta_series(lattice_e6(), 20);
    FormalSMF unknown = E4;
    unknown.set_weight({});
    for (const FormalSMF* F : std::vector<const FormalSMF*>{&E4, &br, &gr, &half, &unknown}) {
        const std::string s = serialize(*F);
        const FormalSMF back = deserialize(s);
        CHECK(back == *F);
        CHECK(back.weight() == F->weight());
        CHECK(serialize(back) == s);
    }
    CHECK(serialize(br).find("ring poly 2\n") != std::string::npos);
    CHECK(serialize(gr).find("ring groupring 0\n") != std::string::npos);
    CHECK(serialize(half).find("weight 3 0\n") != std::string::npos);
    CHECK(serialize(unknown).find("weight ? 0\n") != std::string::npos);

    const std::string path = "test_serialize_tmp.fsmf";
    save_fsmf(br, path);
    CHECK(load_fsmf(path) == br);
    std::remove(path.c_str());
}

TEST_CASE("loader rejects malformed input")
{
    FormalSMF F(4, Character::One, Module::scalar(), Weight::of(4));
    const std::string good = serialize(F);
    CHECK(error_name(good).empty());
    CHECK(error_name("FSMF 2\n") == "ParseError");
    CHECK(error_name(good.substr(0, good.size() - 10)) == "ParseError");  // missing keys
    CHECK(error_name(good + "1 1 2 : 0\n") == "ParseError");              // extra key
    std::string swapped = good;
    swapped.replace(swapped.find("1 1 1 :"), 7, "2 1 1 :");
    CHECK(error_name(swapped) == "ParseError");
    std::string badval = good;
    badval.replace(badval.find("1 0 1 : 0"), 9, "1 0 1 : x");
    CHECK(error_name(badval) == "ParseError");
    std::string badchi = good;
    badchi.replace(badchi.find("character 1"), 11, "character 7");
    CHECK(error_name(badchi) == "ParseError");
    // non-canonical rationals are accepted and canonicalized
    std::string nc = good;
    nc.replace(nc.find("1 0 1 : 0"), 9, "1 0 1 : 2/4");
    CHECK(deserialize(nc).at({1, 0, 1}).scalar_value() == make_rational(1, 2));
    CHECK_THROWS_AS(load_fsmf("/nonexistent/x.fsmf"), Error);
}
