#include "smf/serialize.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "smf/errors.hpp"

namespace smf {

std::string serialize(const FormalSMF& F)
{
    std::ostringstream os;
    const Module& m = F.module();
    os << "FSMF 1\n";
    os << "weight " << (F.weight().known ? to_string(F.weight().k) : std::string("?")) << " " << F.weight().j << "\n";
    os << "character " << to_string(F.character()) << "\n";
    if (m.group_ring)
        os << "ring groupring " << m.j << "\n";
    else if (m.j == 0)
        os << "ring rational\n";
    else
        os << "ring poly " << m.j << "\n";
    os << "precision disc " << F.precision() << "\n";
    const std::size_t W = F.width();
    for (std::size_t i = 0; i < F.size(); ++i) {
        const BinQF& f = F.key(i);
        os << f.a << " " << f.b << " " << f.c << " :";
        const Rational* v = F.data(i);
        for (std::size_t r = 0; r < W; ++r) os << " " << to_string(v[r]);
        os << "\n";
    }
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what)
{
    fail("ParseError", "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

std::int64_t parse_int(const std::string& s, int line)
{
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) parse_fail(line, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(line, "bad integer '" + s + "'");
    }
}

}  // namespace

FormalSMF deserialize(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    auto next = [&]() -> std::vector<std::string> {
        if (!std::getline(is, line)) parse_fail(ln + 1, "unexpected end of input");
        ++ln;
        return words(line);
    };

    auto w = next();
    if (w != std::vector<std::string>{"FSMF", "1"}) parse_fail(ln, "expected 'FSMF 1'");
    w = next();
    if (w.size() != 3 || w[0] != "weight") parse_fail(ln, "expected 'weight <k> <j>'");
    Weight wt;
    if (w[1] != "?") {
        try {
            wt = Weight::of(parse_rational(w[1]), static_cast<int>(parse_int(w[2], ln)));
        } catch (const Error&) {
            parse_fail(ln, "bad weight");
        }
    } else {
        wt.j = static_cast<int>(parse_int(w[2], ln));
    }
    w = next();
    if (w.size() != 2 || w[0] != "character") parse_fail(ln, "expected 'character <chi>'");
    const Character chi = parse_character(w[1]);
    w = next();
    Module mod;
    if (w.size() == 2 && w[0] == "ring" && w[1] == "rational")
        mod = Module::scalar();
    else if (w.size() == 3 && w[0] == "ring" && (w[1] == "poly" || w[1] == "groupring")) {
        const std::int64_t j = parse_int(w[2], ln);
        if (j < 0 || j > 1000) parse_fail(ln, "bad degree");
        mod = Module{static_cast<int>(j), w[1] == "groupring"};
    } else {
        parse_fail(ln, "expected 'ring rational | poly <j> | groupring <j>'");
    }
    w = next();
    if (w.size() != 3 || w[0] != "precision" || w[1] != "disc") parse_fail(ln, "expected 'precision disc <X>'");
    const std::int64_t X = parse_int(w[2], ln);
    if (X < 0) parse_fail(ln, "negative precision");

    FormalSMF F(X, chi, mod, wt);
    const std::size_t W = F.width();
    for (std::size_t i = 0; i < F.size(); ++i) {
        w = next();
        if (w.size() != 4 + W || w[3] != ":") parse_fail(ln, "expected '<a> <b> <c> : <" + std::to_string(W) + " values>'");
        const BinQF f{parse_int(w[0], ln), parse_int(w[1], ln), parse_int(w[2], ln)};
        if (!(f == F.key(i))) parse_fail(ln, "expected key " + to_string(F.key(i)) + ", got " + to_string(f));
        Rational* dst = F.data(i);
        for (std::size_t r = 0; r < W; ++r) {
            try {
                dst[r] = parse_rational(w[4 + r]);
            } catch (const Error&) {
                parse_fail(ln, "bad rational '" + w[4 + r] + "'");
            }
        }
    }
    while (std::getline(is, line)) {
        ++ln;
        if (!words(line).empty()) parse_fail(ln, "extra key beyond precision " + std::to_string(X));
    }
    return F;
}

void save_fsmf(const FormalSMF& F, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("IOError", "cannot write " + path);
    out << serialize(F);
    if (!out) fail("IOError", "write failed: " + path);
}

FormalSMF load_fsmf(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IOError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize(ss.str());
}

}  // namespace smf
