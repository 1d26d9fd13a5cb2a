#include "smf/rings.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "smf/brackets.hpp"
#include "smf/errors.hpp"
#include "smf/lifts.hpp"
#include "smf/theta.hpp"

namespace smf {

namespace {

FormalSMF cusp_lift(bool phi10, long k, std::int64_t X)
{
    const std::int64_t n = jacobi_nmax_for(X);
    const auto m = static_cast<std::size_t>(n + 1);
    const QSeries zero = QSeries::zero(m), d = delta(m);
    const FormalSMF F = maass_lift(phi10 ? skoruppa_I(zero, d, k, n) : skoruppa_I(d, zero, k, n), k, X);
    return normalize_at(F, {1, 1, 1});
}

ThetaChar tc(int a1, int a2, int b1, int b2) { return {a1, a2, b1, b2}; }

std::vector<ThetaChar> repeat(const std::vector<ThetaChar>& v, int times)
{
    std::vector<ThetaChar> out;
    for (int i = 0; i < times; ++i) out.insert(out.end(), v.begin(), v.end());
    return out;
}

class Builder {
public:
    Builder(int level, std::int64_t X) : level_(level), X_(X)
    {
        if (level < 1 || level > 4) fail("BadLevel", std::to_string(level));
        if (X < 4) fail("InsufficientPrecision", "catalog precision must be at least 4");
    }

    const FormalSMF& get(const std::string& name)
    {
        auto it = cache_.find(name);
        if (it != cache_.end()) return it->second;
        FormalSMF F = build(name);
        return cache_.emplace(name, std::move(F)).first->second;
    }

private:
    FormalSMF build(const std::string& n)
    {
        switch (level_) {
        case 1: return level1(n);
        case 2: return level2(n);
        case 3: return level3(n);
        default: return level4(n);
        }
    }

    FormalSMF level1(const std::string& n)
    {
        if (n == "E4") return eisenstein2(4, X_);
        if (n == "E6") return eisenstein2(6, X_);
        if (n == "chi10") return cusp_lift(true, 10, X_);
        if (n == "chi12") return cusp_lift(false, 12, X_);
        if (n == "chi35") return normalize_first_nonzero(wronskian(get("E4"), get("E6"), get("chi10"), get("chi12")));
        unknown(n);
    }

    // theta_{a,b}(Z)
    FormalSMF level2(const std::string& n)
    {
        const ThetaChar z00 = tc(0, 0, 0, 0), z01 = tc(0, 0, 0, 1), z10 = tc(0, 0, 1, 0), z11 = tc(0, 0, 1, 1);
        const Rational q = make_rational(1, 4);
        if (n == "X")
            return theta_product_form({{q, repeat({z00}, 4)}, {q, repeat({z01}, 4)}, {q, repeat({z10}, 4)}, {q, repeat({z11}, 4)}},
                                      8, X_, Weight::of(2));
        if (n == "Y") return theta_product_form({{1, repeat({z00, z01, z10, z11}, 2)}}, 8, X_, Weight::of(4));
        if (n == "Z") {
            // (t1^4 - t2^4)^2 = t1^8 - 2 t1^4 t2^4 + t2^8
            const ThetaChar t1 = tc(0, 1, 0, 0), t2 = tc(0, 1, 1, 0);
            const Rational s = make_rational(1, 16384);
            return theta_product_form({{s, repeat({t1}, 8)}, {-2 * s, repeat({t1, t2}, 4)}, {s, repeat({t2}, 8)}}, 8, X_,
                                      Weight::of(4));
        }
        if (n == "K")
            return theta_product_form(
                {{make_rational(1, 4096),
                  repeat({tc(0, 1, 0, 0), tc(0, 1, 1, 0), tc(1, 0, 0, 0), tc(1, 0, 0, 1), tc(1, 1, 0, 0), tc(1, 1, 1, 1)}, 2)}},
                8, X_, Weight::of(6));
        if (n == "chi19") return normalize_first_nonzero(wronskian(get("X"), get("Y"), get("Z"), get("K")));
        unknown(n);
    }

    FormalSMF level3(const std::string& n)
    {
        if (n == "alpha1") return theta_series(lattice_a2(), X_);
        if (n == "theta_E6") return theta_series(lattice_e6(), X_);
        if (n == "theta_E6*") return theta_series(lattice_e6_star(), X_);
        if (n == "beta3")
            return add(sub(get("theta_E6"), scale(power(get("alpha1"), 3), 10)), scale(get("theta_E6*"), 9));
        if (n == "delta3") return sub(get("theta_E6"), scale(get("theta_E6*"), 9));
        if (n == "gamma4") return gamma4(X_);
        if (n == "chi14")
            return normalize_first_nonzero(wronskian(get("alpha1"), get("beta3"), get("delta3"), get("gamma4")));
        unknown(n);
    }

    // theta_{a,b}(2Z); chi5 is also taken in 2Z since theta(Z)^10 has support off Q
    FormalSMF level4(const std::string& n)
    {
        const ThetaChar z00 = tc(0, 0, 0, 0);
        if (n == "f1") return theta_product_form({{1, {z00, z00}}}, 4, X_, Weight::of(1));
        if (n == "g2")
            return theta_product_form({{1, repeat({z00}, 4)},
                                       {1, repeat({tc(0, 1, 0, 0)}, 4)},
                                       {1, repeat({tc(1, 0, 0, 0)}, 4)},
                                       {1, repeat({tc(1, 1, 0, 0)}, 4)}},
                                      4, X_, Weight::of(2));
        if (n == "h2")
            return theta_product_form({{1, repeat({z00}, 4)},
                                       {1, repeat({tc(0, 0, 0, 1)}, 4)},
                                       {1, repeat({tc(0, 0, 1, 0)}, 4)},
                                       {1, repeat({tc(0, 0, 1, 1)}, 4)}},
                                      4, X_, Weight::of(2));
        if (n == "f3")
            return theta_product_form({{1, repeat({tc(0, 0, 0, 1), tc(0, 0, 1, 0), tc(0, 0, 1, 1)}, 2)}}, 4, X_,
                                      Weight::of(3));
        if (n == "chi5")
            return theta_product_form({{1,
                                        {z00, tc(0, 0, 0, 1), tc(0, 0, 1, 0), tc(0, 0, 1, 1), tc(0, 1, 0, 0), tc(0, 1, 1, 0),
                                         tc(1, 0, 0, 0), tc(1, 0, 0, 1), tc(1, 1, 0, 0), tc(1, 1, 1, 1)}}},
                                      chi5_scale, X_, Weight::of(5));
        if (n == "chi11") return normalize_first_nonzero(wronskian(get("f1"), get("g2"), get("h2"), get("f3")));
        unknown(n);
    }

    [[noreturn]] void unknown(const std::string& n)
    {
        fail("UnknownGenerator", "level " + std::to_string(level_) + " has no generator '" + n + "'");
    }

public:
    static constexpr std::int64_t chi5_scale = 4;

private:
    int level_;
    std::int64_t X_;
    std::map<std::string, FormalSMF> cache_;
};

}  // namespace

std::vector<GeneratorInfo> catalog(int level)
{
    auto w = [](long k) { return Rational(k); };
    switch (level) {
    case 1: return {{"E4", w(4)}, {"E6", w(6)}, {"chi10", w(10)}, {"chi12", w(12)}, {"chi35", w(35)}};
    case 2: return {{"X", w(2)}, {"Y", w(4)}, {"Z", w(4)}, {"K", w(6)}, {"chi19", w(19)}};
    case 3: return {{"alpha1", w(1)}, {"beta3", w(3)}, {"delta3", w(3)}, {"gamma4", w(4)}, {"chi14", w(14)}};
    case 4: return {{"f1", w(1)}, {"g2", w(2)}, {"h2", w(2)}, {"f3", w(3)}, {"chi5", w(5)}, {"chi11", w(11)}};
    default: fail("BadLevel", std::to_string(level));
    }
}

std::vector<NamedForm> generators(int level, std::int64_t X)
{
    Builder b(level, X);
    std::vector<NamedForm> out;
    for (const auto& g : catalog(level)) out.push_back({g.name, b.get(g.name)});
    return out;
}

FormalSMF generator(int level, const std::string& name, std::int64_t X)
{
    Builder b(level, X);
    return b.get(name);
}

std::vector<FormalSMF> igusa_generators(std::int64_t X)
{
    std::vector<FormalSMF> out;
    for (auto& g : generators(1, X)) out.push_back(std::move(g.form));
    return out;
}

std::vector<Monomial> monomials_level1(int k)
{
    std::vector<Monomial> out;
    for (int c35 = 0; c35 <= 1; ++c35) {
        const int r = k - 35 * c35;
        if (r < 0) continue;
        for (int d = 0; 12 * d <= r; ++d)
            for (int c = 0; 12 * d + 10 * c <= r; ++c)
                for (int b = 0; 12 * d + 10 * c + 6 * b <= r; ++b) {
                    const int rest = r - 12 * d - 10 * c - 6 * b;
                    if (rest % 4 == 0) out.push_back({rest / 4, b, c, d, c35});
                }
    }
    return out;
}

std::int64_t dim_level1(int k)
{
    if (k < 0) return 0;
    return static_cast<std::int64_t>(monomials_level1(k).size());
}

std::string Monomial::name() const
{
    std::string s;
    auto put = [&](const char* g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += g;
        if (e > 1) s += "^" + std::to_string(e);
    };
    put("E4", e4);
    put("E6", e6);
    put("chi10", c10);
    put("chi12", c12);
    put("chi35", c35);
    return s.empty() ? "1" : s;
}

std::vector<FormalSMF> basis_level1(int k, std::int64_t X)
{
    const auto mons = monomials_level1(k);
    if (mons.empty()) return {};
    const bool odd = std::any_of(mons.begin(), mons.end(), [](const Monomial& m) { return m.c35 > 0; });
    std::vector<FormalSMF> gens;
    {
        Builder b(1, X);
        for (const char* n : {"E4", "E6", "chi10", "chi12"}) gens.push_back(b.get(n));
        if (odd) gens.push_back(b.get("chi35"));
    }
    std::map<std::pair<int, int>, FormalSMF> powers;
    auto pw = [&](int g, int e) -> const FormalSMF& {
        auto it = powers.find({g, e});
        if (it == powers.end()) it = powers.emplace(std::make_pair(g, e), power(gens[static_cast<std::size_t>(g)], e)).first;
        return it->second;
    };
    std::vector<FormalSMF> out;
    for (const auto& m : mons) {
        FormalSMF F = FormalSMF::one(X);
        const int e[5] = {m.e4, m.e6, m.c10, m.c12, m.c35};
        for (int g = 0; g < 5; ++g)
            if (e[g] > 0) F = mul(F, pw(g, e[g]));
        out.push_back(std::move(F));
    }
    const std::size_t r = coefficient_rank(out);
    if (r < out.size())
        fail("InsufficientPrecision", "weight " + std::to_string(k) + " monomials have rank " + std::to_string(r) + " < " +
                                          std::to_string(out.size()) + " at precision " + std::to_string(X));
    return out;
}

namespace {

// Rows (key, component) over the smallest precision, columns forms.
RMatrix coefficient_matrix(const std::vector<FormalSMF>& forms, std::int64_t X)
{
    const std::size_t W = forms[0].width();
    const PrecisionIndex& idx = *PrecisionIndex::get(X);
    RMatrix m(idx.size() * W, forms.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < forms.size(); ++c) {
            const CoeffValue v = forms[c].at(idx.forms()[i]);
            for (std::size_t r = 0; r < W; ++r) m(i * W + r, c) = v.v[r];
        }
    return m;
}

std::int64_t common_precision(const std::vector<FormalSMF>& forms)
{
    std::int64_t X = forms[0].precision();
    for (const auto& F : forms) {
        if (!(F.module() == forms[0].module())) fail("ModuleMismatch", "forms take values in different modules");
        X = std::min(X, F.precision());
    }
    return X;
}

}  // namespace

std::size_t coefficient_rank(const std::vector<FormalSMF>& forms)
{
    if (forms.empty()) return 0;
    return rank(coefficient_matrix(forms, common_precision(forms)));
}

RVec express_in_basis(const FormalSMF& F, const std::vector<FormalSMF>& basis)
{
    if (basis.empty()) fail("UnderDetermined", "empty basis");
    for (const auto& B : basis) {
        if (B.weight().known && F.weight().known && !(B.weight() == F.weight()))
            fail("WeightMismatch", "basis weight differs from the form's");
        if (B.character() != F.character() && !B.is_zero() && !F.is_zero())
            fail("CharacterMismatch", "basis character differs from the form's");
    }
    std::vector<FormalSMF> all = basis;
    all.push_back(F);
    const std::int64_t X = common_precision(all);
    const RMatrix A = coefficient_matrix(basis, X);
    if (rank(A) < basis.size())
        fail("UnderDetermined", "basis has rank " + std::to_string(rank(A)) + " on the shared keys");
    const RMatrix b = coefficient_matrix({F}, X);
    RVec rhs(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) rhs[i] = b(i, 0);
    try {
        return solve(A, rhs);
    } catch (const Error& e) {
        if (e.name() == "Inconsistent") fail("NotInSpan", "no exact combination at precision " + std::to_string(X));
        throw;
    }
}

}  // namespace smf
