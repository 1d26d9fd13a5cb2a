#include "smf/brackets.hpp"

#include <array>

#include "smf/errors.hpp"

namespace smf {

namespace {

void require_scalar(const FormalSMF& F)
{
    if (!(F.module() == Module::scalar())) fail("ModuleMismatch", "expected a scalar form, got " + to_string(F.module()));
}

const Rational& weight_of(const FormalSMF& F)
{
    if (!F.weight().known) fail("UnknownWeight", "weight metadata missing");
    return F.weight().k;
}

FormalSMF times_quadratic(const FormalSMF& F, int power)
{
    require_scalar(F);
    FormalSMF out(F.precision(), F.character(), Module::poly(2 * power),
                  F.weight().known ? Weight::of(F.weight().k, 2 * power) : Weight{});
    for (std::size_t i = 0; i < F.size(); ++i) {
        const BinQF& f = F.key(i);
        const Rational& v = F.data(i)[0];
        if (v == 0) continue;
        HomPoly q(std::vector<Rational>{Rational(f.a), Rational(f.b), Rational(f.c)});
        HomPoly p = q;
        for (int e = 1; e < power; ++e) p = p * q;
        Rational* d = out.data(i);
        for (int t = 0; t <= 2 * power; ++t) d[t] = v * p[t];
    }
    return out;
}

}  // namespace

FormalSMF dZ(const FormalSMF& F) { return times_quadratic(F, 1); }
FormalSMF dZZ(const FormalSMF& F) { return times_quadratic(F, 2); }

FormalSMF satoh_bracket(const FormalSMF& F, const FormalSMF& G)
{
    require_scalar(F);
    require_scalar(G);
    const Rational k = weight_of(F), kp = weight_of(G);
    if (k == 0 || kp == 0) fail("ZeroWeight", "Satoh bracket needs nonzero weights");
    FormalSMF out = sub(scale(mul(G, dZ(F)), 1 / k), scale(mul(F, dZ(G)), 1 / kp));
    out.set_character(F.character() * G.character());
    out.set_weight(Weight::of(k + kp, 2));
    return out;
}

FormalSMF ibukiyama_sym4(const FormalSMF& F, const FormalSMF& G)
{
    require_scalar(F);
    require_scalar(G);
    const Rational k = weight_of(F), kp = weight_of(G);
    if (!is_integer(k) || k.get_num() % 2 != 0) fail("OddFirstWeight", "first weight must be even");
    const FormalSMF t1 = scale(mul(G, dZZ(F)), kp * (kp + 1) / 2);
    const FormalSMF t2 = scale(mul(dZ(F), dZ(G)), (kp + 1) * (k + 1));
    const FormalSMF t3 = scale(mul(F, dZZ(G)), k * (k + 1) / 2);
    FormalSMF out = add(sub(t1, t2), t3);
    out.set_character(F.character() * G.character());
    out.set_weight(Weight::of(k + kp, 4));
    return out;
}

// ------------------------------------------------------------------ Wronskian

namespace {

// Dense scalar table over psd forms with a <= A, c <= C, b running over
// [-isqrt(4ac), isqrt(4ac)].
class Box {
public:
    Box(std::int64_t A, std::int64_t C) : A_(A), C_(C), start_(static_cast<std::size_t>((A + 1) * (C + 1)))
    {
        std::int64_t n = 0;
        for (std::int64_t a = 0; a <= A; ++a)
            for (std::int64_t c = 0; c <= C; ++c) {
                const std::int64_t r = isqrt(4 * a * c);
                start_[a * (C + 1) + c] = n + r;
                n += 2 * r + 1;
            }
        data_.resize(static_cast<std::size_t>(n));
    }

    std::int64_t max_a() const { return A_; }
    std::int64_t max_c() const { return C_; }
    Rational& at(const BinQF& f) { return data_[start_[f.a * (C_ + 1) + f.c] + f.b]; }
    const Rational& at(const BinQF& f) const { return data_[start_[f.a * (C_ + 1) + f.c] + f.b]; }

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (std::int64_t a = 0; a <= A_; ++a)
            for (std::int64_t c = 0; c <= C_; ++c) {
                const std::int64_t r = isqrt(4 * a * c);
                for (std::int64_t b = -r; b <= r; ++b) fn(BinQF{a, b, c});
            }
    }

private:
    std::int64_t A_, C_;
    std::vector<std::int64_t> start_;
    std::vector<Rational> data_;
};

// out(g) = sum_{T + S = g} x(T) y(S) - z(T) w(S) over the box
Box bilinear(const Box& x, const Box& y, const Box& z, const Box& w)
{
    Box out(x.max_a(), x.max_c());
    Rational t;
    out.for_each([&](const BinQF& g) {
        Rational s = 0;
        for_each_summand(g, [&](const BinQF& T, const BinQF& S) {
            const Rational& xt = x.at(T);
            const Rational& zt = z.at(T);
            if (xt != 0) {
                t = xt * y.at(S);
                s += t;
            }
            if (zt != 0) {
                t = zt * w.at(S);
                s -= t;
            }
        });
        out.at(g) = s;
    });
    return out;
}

}  // namespace

FormalSMF wronskian(const FormalSMF& F1, const FormalSMF& F2, const FormalSMF& F3, const FormalSMF& F4,
                    bool definite_tail)
{
    const std::array<const FormalSMF*, 4> F{&F1, &F2, &F3, &F4};
    std::int64_t X = F1.precision();
    Rational ksum = 0;
    Character chi = Character::Det;
    for (const auto* f : F) {
        require_scalar(*f);
        ksum += weight_of(*f);
        X = std::min(X, f->precision());
        chi = chi * f->character();
    }
    const auto idx = PrecisionIndex::get(X);
    const std::int64_t A = idx->max_a(), C = idx->max_c();

    // rows of the determinant: k C(T), a C(T), b C(T), c C(T)
    std::array<std::array<Box, 4>, 4> rows{
        {{Box(A, C), Box(A, C), Box(A, C), Box(A, C)},
         {Box(A, C), Box(A, C), Box(A, C), Box(A, C)},
         {Box(A, C), Box(A, C), Box(A, C), Box(A, C)},
         {Box(A, C), Box(A, C), Box(A, C), Box(A, C)}}};
    for (int i = 0; i < 4; ++i) {
        const DenseTable tab(*F[i], A, C, false);
        const Rational k = weight_of(*F[i]);
        const bool tail = definite_tail && i >= 2;
        rows[i][0].for_each([&](const BinQF& T) {
            const Rational* v = tab.get(T);
            if (!v || *v == 0) return;
            if (tail && 4 * T.a * T.c - T.b * T.b <= 0) return;
            rows[i][0].at(T) = k * *v;
            rows[i][1].at(T) = Rational(T.a) * *v;
            rows[i][2].at(T) = Rational(T.b) * *v;
            rows[i][3].at(T) = Rational(T.c) * *v;
        });
    }

    // Laplace expansion along the column pairs (1,2) | (3,4)
    FormalSMF out(X, chi, Module::scalar(), Weight::of(ksum + 3));
    std::vector<Rational> acc(idx->size());
    for (int r = 0; r < 4; ++r)
        for (int s = r + 1; s < 4; ++s) {
            int u = -1, v = -1;
            for (int t = 0; t < 4; ++t)
                if (t != r && t != s) (u < 0 ? u : v) = t;
            const int sign = ((r + s) % 2 == 1) ? 1 : -1;
            const Box P = bilinear(rows[0][r], rows[1][s], rows[0][s], rows[1][r]);
            const Box Q = bilinear(rows[2][u], rows[3][v], rows[2][v], rows[3][u]);
            for (std::size_t i = 0; i < idx->size(); ++i) {
                Rational t = 0;
                for_each_summand(idx->forms()[i], [&](const BinQF& T, const BinQF& S) {
                    const Rational& p = P.at(T);
                    if (p != 0) t += p * Q.at(S);
                });
                if (sign > 0)
                    acc[i] += t;
                else
                    acc[i] -= t;
            }
        }
    for (std::size_t i = 0; i < idx->size(); ++i) out.data(i)[0] = acc[i];
    return out;
}

}  // namespace smf
