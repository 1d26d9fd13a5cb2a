#include "smf/fsmf.hpp"

#include <algorithm>
#include <sstream>

#include "smf/errors.hpp"

namespace smf {

FormalSMF::FormalSMF() : FormalSMF(0, Character::One, Module::scalar()) {}

FormalSMF::FormalSMF(std::int64_t X, Character chi, Module mod, Weight w)
    : X_(X), chi_(chi), mod_(mod), w_(std::move(w)), idx_(PrecisionIndex::get(X))
{
    if (X < 0) fail("DomainError", "negative precision");
    data_.resize(idx_->size() * width());
}

FormalSMF FormalSMF::one(std::int64_t X)
{
    FormalSMF F(X, Character::One, Module::scalar(), Weight::of(0));
    F.set({0, 0, 0}, Rational(1));
    return F;
}

CoeffValue FormalSMF::at(const BinQF& f) const
{
    const auto i = idx_->position(f);
    if (i < 0) fail("OutOfPrecision", to_string(f) + " is not a stored key at precision " + std::to_string(X_));
    CoeffValue v(mod_);
    std::copy(data(static_cast<std::size_t>(i)), data(static_cast<std::size_t>(i)) + width(), v.v.begin());
    return v;
}

void FormalSMF::set(const BinQF& f, const CoeffValue& v)
{
    if (!(v.mod == mod_)) fail("ModuleMismatch", to_string(v.mod) + " vs " + to_string(mod_));
    const auto i = idx_->position(f);
    if (i < 0) fail("OutOfPrecision", to_string(f) + " is not a stored key");
    std::copy(v.v.begin(), v.v.end(), data(static_cast<std::size_t>(i)));
}

void FormalSMF::set(const BinQF& f, const Rational& v)
{
    if (!(mod_ == Module::scalar())) fail("ModuleMismatch", "scalar value for " + to_string(mod_));
    const auto i = idx_->position(f);
    if (i < 0) fail("OutOfPrecision", to_string(f) + " is not a stored key");
    *data(static_cast<std::size_t>(i)) = v;
}

void FormalSMF::coefficient_into(const BinQF& f, Rational* out) const
{
    if (!within_precision(f, X_))
        fail("OutOfPrecision", to_string(f) + " at precision " + std::to_string(X_));
    const Reduction r = reduce(f);
    const auto i = idx_->position(r.form);
    const Rational* src = data(static_cast<std::size_t>(i));
    std::copy(src, src + width(), out);
    if (!(r.transform == UnimodMat::identity())) act_value(r.transform, chi_, mod_, out);
}

CoeffValue FormalSMF::coefficient(const BinQF& f) const
{
    CoeffValue v(mod_);
    coefficient_into(f, v.v.data());
    return v;
}

bool FormalSMF::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

FormalSMF FormalSMF::truncated(std::int64_t X) const
{
    if (X > X_) fail("OutOfPrecision", "cannot extend precision");
    FormalSMF G(X, chi_, mod_, w_);
    for (std::size_t i = 0; i < G.size(); ++i) {
        const auto k = idx_->position(G.key(i));
        std::copy(data(static_cast<std::size_t>(k)), data(static_cast<std::size_t>(k)) + width(), G.data(i));
    }
    return G;
}

bool operator==(const FormalSMF& x, const FormalSMF& y)
{
    return x.X_ == y.X_ && x.chi_ == y.chi_ && x.mod_ == y.mod_ && x.data_ == y.data_;
}

std::string describe(const FormalSMF& F)
{
    std::ostringstream os;
    os << "FormalSMF(X=" << F.precision() << ", chi=" << to_string(F.character())
       << ", ring=" << to_string(F.module());
    if (F.weight().known) os << ", weight=(" << to_string(F.weight().k) << "," << F.weight().j << ")";
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- dense box

DenseTable::DenseTable(const FormalSMF& F, std::int64_t A, std::int64_t C, bool strict)
    : A_(A), C_(C), mod_(F.module())
{
    const std::size_t w = static_cast<std::size_t>(mod_.width());
    start_.resize(static_cast<std::size_t>((A + 1) * (C + 1)) + 1);
    std::int64_t n = 0;
    for (std::int64_t a = 0; a <= A; ++a)
        for (std::int64_t c = 0; c <= C; ++c) {
            start_[static_cast<std::size_t>(a * (C + 1) + c)] = n;
            n += 2 * isqrt(4 * a * c) + 1;
        }
    start_.back() = n;
    data_.resize(static_cast<std::size_t>(n) * w);
    present_.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t a = 0; a <= A; ++a)
        for (std::int64_t c = 0; c <= C; ++c) {
            const std::int64_t r = isqrt(4 * a * c);
            for (std::int64_t b = -r; b <= r; ++b) {
                const BinQF f{a, b, c};
                const auto s = static_cast<std::size_t>(slot(f));
                if (!within_precision(f, F.precision())) {
                    if (strict) fail("OutOfPrecision", to_string(f) + " at precision " + std::to_string(F.precision()));
                    continue;
                }
                F.coefficient_into(f, data_.data() + s * w);
                present_[s] = 1;
            }
        }
}

std::ptrdiff_t DenseTable::slot(const BinQF& f) const
{
    if (f.a < 0 || f.c < 0 || f.a > A_ || f.c > C_) return -1;
    const std::int64_t r = isqrt(4 * f.a * f.c);
    if (f.b < -r || f.b > r) return -1;
    return start_[static_cast<std::size_t>(f.a * (C_ + 1) + f.c)] + f.b + r;
}

bool DenseTable::contains(const BinQF& f) const { return slot(f) >= 0; }

bool DenseTable::present(const BinQF& f) const
{
    const auto s = slot(f);
    return s >= 0 && present_[static_cast<std::size_t>(s)];
}

const Rational* DenseTable::get(const BinQF& f) const
{
    const auto s = slot(f);
    if (s < 0 || !present_[static_cast<std::size_t>(s)]) return nullptr;
    return data_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(mod_.width());
}

CoeffValue DenseTable::value(const BinQF& f) const
{
    const Rational* p = get(f);
    if (!p) fail("OutOfPrecision", to_string(f) + " outside the dense table");
    CoeffValue v(mod_);
    std::copy(p, p + mod_.width(), v.v.begin());
    return v;
}

std::vector<BinQF> DenseTable::forms() const
{
    std::vector<BinQF> out;
    for (std::int64_t a = 0; a <= A_; ++a)
        for (std::int64_t c = 0; c <= C_; ++c) {
            const std::int64_t r = isqrt(4 * a * c);
            for (std::int64_t b = -r; b <= r; ++b)
                if (present({a, b, c})) out.push_back({a, b, c});
        }
    return out;
}

DenseTable expand_box(const FormalSMF& F, std::int64_t A, std::int64_t C) { return DenseTable(F, A, C, true); }

// ------------------------------------------------------------- arithmetic

namespace {

bool compatible_characters(const FormalSMF& F, const FormalSMF& G)
{
    return F.character() == G.character() || F.module().group_ring || F.is_zero() || G.is_zero();
}

Weight sum_weight(const FormalSMF& F, const FormalSMF& G)
{
    if (F.weight().known && G.weight().known && F.weight() == G.weight()) return F.weight();
    if (F.is_zero() && G.weight().known) return G.weight();
    if (G.is_zero() && F.weight().known) return F.weight();
    return {};
}

FormalSMF combine(const FormalSMF& F, const FormalSMF& G, int sign)
{
    if (!(F.module() == G.module()))
        fail("ModuleMismatch", to_string(F.module()) + " vs " + to_string(G.module()));
    if (!compatible_characters(F, G))
        fail("CharacterMismatch", to_string(F.character()) + " vs " + to_string(G.character()));
    const std::int64_t X = std::min(F.precision(), G.precision());
    const Character chi = F.is_zero() && !G.is_zero() ? G.character() : F.character();
    FormalSMF R(X, chi, F.module(), sum_weight(F, G));
    const FormalSMF Ft = F.truncated(X), Gt = G.truncated(X);
    const std::size_t w = R.width();
    for (std::size_t i = 0; i < R.size(); ++i) {
        const Rational* x = Ft.data(i);
        const Rational* y = Gt.data(i);
        Rational* z = R.data(i);
        for (std::size_t t = 0; t < w; ++t) {
            if (sign > 0) z[t] = x[t] + y[t];
            else z[t] = x[t] - y[t];
        }
    }
    return R;
}

}  // namespace

FormalSMF add(const FormalSMF& F, const FormalSMF& G) { return combine(F, G, 1); }
FormalSMF sub(const FormalSMF& F, const FormalSMF& G) { return combine(F, G, -1); }

FormalSMF scale(const FormalSMF& F, const Rational& s)
{
    FormalSMF R(F);
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t t = 0; t < R.width(); ++t) R.data(i)[t] *= s;
    return R;
}

FormalSMF mul(const FormalSMF& F, const FormalSMF& G)
{
    const Module mod = product_module(F.module(), G.module());
    const std::int64_t X = std::min(F.precision(), G.precision());
    Weight w;
    if (F.weight().known && G.weight().known)
        w = Weight::of(F.weight().k + G.weight().k, F.weight().j + G.weight().j);
    FormalSMF R(X, F.character() * G.character(), mod, w);
    const auto& idx = R.index();
    const std::int64_t A = idx.max_a(), C = idx.max_c();
    const DenseTable TF(F, A, C, false), TG(G, A, C, false);

    // Clear denominators so the inner loop runs over integers.
    const Module mf = F.module(), mg = G.module();
    const int wf = mf.width(), wg = mg.width(), wr = mod.width();
    Integer LF = 1, LG = 1;
    for (const auto& f : TF.forms()) {
        const Rational* p = TF.get(f);
        for (int t = 0; t < wf; ++t)
            if (p[t].get_den() != 1) mpz_lcm(LF.get_mpz_t(), LF.get_mpz_t(), p[t].get_den_mpz_t());
    }
    for (const auto& f : TG.forms()) {
        const Rational* p = TG.get(f);
        for (int t = 0; t < wg; ++t)
            if (p[t].get_den() != 1) mpz_lcm(LG.get_mpz_t(), LG.get_mpz_t(), p[t].get_den_mpz_t());
    }
    // integer copies laid out in box order
    auto box_slots = [A, C](std::int64_t a, std::int64_t c) { return 2 * isqrt(4 * a * c) + 1; };
    std::vector<std::int64_t> start(static_cast<std::size_t>((A + 1) * (C + 1)));
    std::int64_t n = 0;
    for (std::int64_t a = 0; a <= A; ++a)
        for (std::int64_t c = 0; c <= C; ++c) {
            start[static_cast<std::size_t>(a * (C + 1) + c)] = n;
            n += box_slots(a, c);
        }
    std::vector<Integer> IF(static_cast<std::size_t>(n * wf)), IG(static_cast<std::size_t>(n * wg));
    std::vector<char> okF(static_cast<std::size_t>(n), 0), okG(static_cast<std::size_t>(n), 0);
    for (std::int64_t a = 0; a <= A; ++a)
        for (std::int64_t c = 0; c <= C; ++c) {
            const std::int64_t r = isqrt(4 * a * c);
            for (std::int64_t b = -r; b <= r; ++b) {
                const auto s = static_cast<std::size_t>(start[static_cast<std::size_t>(a * (C + 1) + c)] + b + r);
                if (const Rational* p = TF.get({a, b, c})) {
                    okF[s] = 1;
                    for (int t = 0; t < wf; ++t) {
                        Integer& z = IF[s * static_cast<std::size_t>(wf) + static_cast<std::size_t>(t)];
                        z = LF / p[t].get_den() * p[t].get_num();
                    }
                }
                if (const Rational* p = TG.get({a, b, c})) {
                    okG[s] = 1;
                    for (int t = 0; t < wg; ++t) {
                        Integer& z = IG[s * static_cast<std::size_t>(wg) + static_cast<std::size_t>(t)];
                        z = LG / p[t].get_den() * p[t].get_num();
                    }
                }
            }
        }

    const int nf = mf.j + 1, ng = mg.j + 1, nr = mod.j + 1;
    std::vector<Integer> acc(static_cast<std::size_t>(wr));
    const Integer den = LF * LG;
    for (std::size_t i = 0; i < R.size(); ++i) {
        const BinQF f = R.key(i);
        for (auto& z : acc) z = 0;
        for (std::int64_t a1 = 0; a1 <= f.a; ++a1) {
            for (std::int64_t c1 = 0; c1 <= f.c; ++c1) {
                const auto [lo, hi] = summand_b_range(f, a1, c1);
                if (lo > hi) continue;
                const std::int64_t a2 = f.a - a1, c2 = f.c - c1;
                const std::int64_t r1 = isqrt(4 * a1 * c1), r2 = isqrt(4 * a2 * c2);
                const std::int64_t s1 = start[static_cast<std::size_t>(a1 * (C + 1) + c1)] + r1;
                const std::int64_t s2 = start[static_cast<std::size_t>(a2 * (C + 1) + c2)] + r2 + f.b;
                for (std::int64_t b1 = lo; b1 <= hi; ++b1) {
                    const auto u = static_cast<std::size_t>(s1 + b1);
                    const auto v = static_cast<std::size_t>(s2 - b1);
                    if (!okF[u] || !okG[v]) fail("OutOfPrecision", "summand outside operand precision");
                    const Integer* x = &IF[u * static_cast<std::size_t>(wf)];
                    const Integer* y = &IG[v * static_cast<std::size_t>(wg)];
                    if (wr == 1) {
                        if (sgn(x[0]) && sgn(y[0])) mpz_addmul(acc[0].get_mpz_t(), x[0].get_mpz_t(), y[0].get_mpz_t());
                        continue;
                    }
                    const int parts = mod.parts();
                    for (int px = 0; px < parts; ++px)
                        for (int py = 0; py < parts; ++py) {
                            const Integer* xx = x + px * nf;
                            const Integer* yy = y + py * ng;
                            Integer* zz = acc.data() + (px ^ py) * nr;
                            for (int s = 0; s < nf; ++s) {
                                if (!sgn(xx[s])) continue;
                                for (int t = 0; t < ng; ++t)
                                    if (sgn(yy[t])) mpz_addmul(zz[s + t].get_mpz_t(), xx[s].get_mpz_t(), yy[t].get_mpz_t());
                            }
                        }
                }
            }
        }
        Rational* out = R.data(i);
        for (int t = 0; t < wr; ++t) {
            out[t] = Rational(acc[static_cast<std::size_t>(t)], den);
            out[t].canonicalize();
        }
    }
    return R;
}

FormalSMF power(const FormalSMF& F, int e)
{
    if (e < 0) fail("DomainError", "negative power");
    if (e == 0) {
        FormalSMF one = FormalSMF::one(F.precision());
        return one;
    }
    FormalSMF R = F;
    for (int i = 1; i < e; ++i) R = mul(R, F);
    return R;
}

FormalSMF embed(const FormalSMF& F)
{
    if (F.module().group_ring) return F;
    const Module m{F.module().j, true};
    FormalSMF R(F.precision(), Character::One, m, F.weight());
    const int n = F.module().j + 1;
    const int part = char_index(F.character());
    for (std::size_t i = 0; i < R.size(); ++i)
        std::copy(F.data(i), F.data(i) + n, R.data(i) + part * n);
    return R;
}

FormalSMF component(const FormalSMF& F, Character chi)
{
    if (!F.module().group_ring) {
        if (F.character() == chi) return F;
        return FormalSMF(F.precision(), chi, F.module(), F.weight());
    }
    const Module m{F.module().j, false};
    FormalSMF R(F.precision(), chi, m, F.weight());
    const int n = m.j + 1;
    const int part = char_index(chi);
    for (std::size_t i = 0; i < R.size(); ++i)
        std::copy(F.data(i) + part * n, F.data(i) + (part + 1) * n, R.data(i));
    return R;
}

FormalSMF scale_index(const FormalSMF& F, std::int64_t d)
{
    if (d < 1) fail("DomainError", "scale factor must be positive");
    if (d == 1) return F;
    FormalSMF R(F.precision() / (d * d), F.character(), F.module(), F.weight());
    for (std::size_t i = 0; i < R.size(); ++i) F.coefficient_into(R.key(i).scaled(d), R.data(i));
    return R;
}

FormalSMF unscale_index(const FormalSMF& F, std::int64_t d)
{
    if (d < 1) fail("DomainError", "scale factor must be positive");
    if (d == 1) return F;
    const std::int64_t cmax = singular_bound(F.precision());
    const std::int64_t X = std::min(F.precision() * d * d, 4 * d * (cmax + 1) - 2);
    FormalSMF R(X, F.character(), F.module(), F.weight());
    for (std::size_t i = 0; i < R.size(); ++i) {
        const BinQF f = R.key(i);
        if (f.a % d || f.b % d || f.c % d) continue;
        F.coefficient_into({f.a / d, f.b / d, f.c / d}, R.data(i));
    }
    return R;
}

FormalSMF contract_index(const FormalSMF& F, std::int64_t d)
{
    if (d < 1) fail("DomainError", "scale factor must be positive");
    for (std::size_t i = 0; i < F.size(); ++i) {
        const BinQF f = F.key(i);
        if (f.a % d == 0 && f.b % d == 0 && f.c % d == 0) continue;
        for (std::size_t t = 0; t < F.width(); ++t)
            if (F.data(i)[t] != 0) fail("SupportNotDivisible", "nonzero coefficient at " + to_string(f));
    }
    return scale_index(F, d);
}

QSeries phi(const FormalSMF& F)
{
    if (!(F.module() == Module::scalar()))
        fail("ModuleMismatch", "phi needs a scalar-valued form, got " + to_string(F.module()));
    const std::int64_t cmax = singular_bound(F.precision());
    QSeries s = QSeries::zero(static_cast<std::size_t>(cmax + 1));
    for (std::int64_t c = 0; c <= cmax; ++c) s[static_cast<std::size_t>(c)] = F.at({0, 0, c}).scalar_value();
    return s;
}

std::optional<BinQF> first_nonzero(const FormalSMF& F)
{
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t t = 0; t < F.width(); ++t)
            if (F.data(i)[t] != 0) return F.key(i);
    return std::nullopt;
}

FormalSMF normalize_at(const FormalSMF& F, const BinQF& f)
{
    const CoeffValue v = F.at(f);
    if (!(v.mod == Module::scalar())) fail("ModuleMismatch", "normalization needs a scalar coefficient");
    if (v.scalar_value() == 0) fail("InsufficientPrecision", "coefficient at " + to_string(f) + " vanishes");
    return scale(F, 1 / v.scalar_value());
}

FormalSMF normalize_first_nonzero(const FormalSMF& F, BinQF* used)
{
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t t = 0; t < F.width(); ++t)
            if (F.data(i)[t] != 0) {
                if (used) *used = F.key(i);
                return scale(F, 1 / F.data(i)[t]);
            }
    fail("InsufficientPrecision", "no nonzero coefficient at precision " + std::to_string(F.precision()));
}

// ------------------------------------------------------------- raw series

RawFourier::RawFourier(std::int64_t A, std::int64_t C, Module mod) : A_(A), C_(C), mod_(mod) {}

CoeffValue RawFourier::coefficient(const BinQF& f) const
{
    if (!covers(f)) fail("OutOfPrecision", to_string(f) + " outside the raw box");
    auto it = m_.find(f);
    if (it == m_.end()) return CoeffValue(mod_);
    return it->second;
}

void RawFourier::add_to(const BinQF& f, const CoeffValue& v)
{
    if (!covers(f)) fail("OutOfPrecision", to_string(f) + " outside the raw box");
    auto it = m_.find(f);
    if (it == m_.end()) {
        if (!v.is_zero()) m_.emplace(f, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) m_.erase(it);
}

void RawFourier::add_to(const BinQF& f, const Rational& v) { add_to(f, CoeffValue::scalar(v)); }

RawFourier RawFourier::scaled(const Rational& s) const
{
    RawFourier r(A_, C_, mod_);
    if (s == 0) return r;
    for (const auto& [f, v] : m_) r.m_.emplace(f, v * s);
    return r;
}

RawFourier RawFourier::operator+(const RawFourier& o) const
{
    if (!(mod_ == o.mod_)) fail("ModuleMismatch", "raw sum");
    RawFourier r(std::min(A_, o.A_), std::min(C_, o.C_), mod_);
    for (const auto& [f, v] : m_)
        if (r.covers(f)) r.add_to(f, v);
    for (const auto& [f, v] : o.m_)
        if (r.covers(f)) r.add_to(f, v);
    return r;
}

std::int64_t promote_box_a(std::int64_t X)
{
    std::int64_t m = 0;
    for (const auto& f : PrecisionIndex::get(X)->forms()) m = std::max(m, f.a + f.b + f.c);
    return m;
}

std::int64_t promote_box_c(std::int64_t X) { return PrecisionIndex::get(X)->max_c(); }

std::int64_t precision_box_a(std::int64_t X) { return std::max(singular_bound(X), X / 3 + 1); }
std::int64_t precision_box_c(std::int64_t X) { return std::max(singular_bound(X), X / 3 + 1); }

FormalSMF promote(const RawFourier& raw, std::int64_t X, Weight w)
{
    const auto idx = PrecisionIndex::get(X);
    const UnimodMat gens[3] = {UnimodMat::S(), UnimodMat::T(), UnimodMat::E()};
    for (const auto& f : idx->forms()) {
        if (!raw.covers(f)) fail("OutOfPrecision", "raw box misses " + to_string(f));
        for (const auto& A : gens)
            if (!raw.covers(act(A, f))) fail("OutOfPrecision", "raw box misses " + to_string(act(A, f)));
    }
    std::string witness;
    auto consistent = [&](Character chi) {
        for (const auto& f : idx->forms()) {
            const CoeffValue v = raw.coefficient(f);
            for (const auto& A : gens) {
                if (!(raw.coefficient(act(A, f)) == act_value(A, chi, v))) {
                    if (witness.empty()) witness = "A=" + to_string(A) + " f=" + to_string(f);
                    return false;
                }
            }
        }
        return true;
    };
    std::optional<Character> found;
    for (int c = 0; c < 4 && !found; ++c)
        if (consistent(char_from_index(c))) found = char_from_index(c);
    if (!found) fail("NotEquivariant", witness);
    // every stored raw entry in precision must agree with its reduced representative
    for (const auto& [g, v] : raw.entries()) {
        if (!within_precision(g, X)) continue;
        const Reduction r = reduce(g);
        if (!(v == act_value(r.transform, *found, raw.coefficient(r.form))))
            fail("NotEquivariant", "A=" + to_string(r.transform) + " f=" + to_string(r.form));
    }
    FormalSMF F(X, *found, raw.module(), w);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const CoeffValue v = raw.coefficient(F.key(i));
        std::copy(v.v.begin(), v.v.end(), F.data(i));
    }
    return F;
}

RawFourier unscale_index(const RawFourier& raw, std::int64_t d)
{
    RawFourier r(raw.max_a() * d, raw.max_c() * d, raw.module());
    for (const auto& [f, v] : raw.entries()) r.add_to(f.scaled(d), v);
    return r;
}

RawFourier contract_index(const RawFourier& raw, std::int64_t d)
{
    RawFourier r(raw.max_a() / d, raw.max_c() / d, raw.module());
    for (const auto& [f, v] : raw.entries()) {
        if (f.a % d || f.b % d || f.c % d) fail("SupportNotDivisible", "nonzero coefficient at " + to_string(f));
        const BinQF g{f.a / d, f.b / d, f.c / d};
        if (r.covers(g)) r.add_to(g, v);
    }
    return r;
}

// ------------------------------------------------------------------ audit

namespace {

std::vector<UnimodMat> small_matrices()
{
    std::vector<UnimodMat> out;
    for (int p = -2; p <= 2; ++p)
        for (int q = -2; q <= 2; ++q)
            for (int r = -2; r <= 2; ++r)
                for (int s = -2; s <= 2; ++s) {
                    const UnimodMat A{p, q, r, s};
                    if (A.det() == 1 || A.det() == -1) out.push_back(A);
                }
    return out;
}

}  // namespace

AuditReport audit_equivariance(const FormalSMF& F, std::mt19937_64& rng, int samples, const DirectEvaluator& direct)
{
    AuditReport rep;
    const UnimodMat gens[3] = {UnimodMat::S(), UnimodMat::T(), UnimodMat::E()};
    auto note = [&rep](const std::string& w) {
        if (rep.ok) rep.witness = w;
        rep.ok = false;
    };
    // stabilizers of stored keys
    static const std::vector<UnimodMat> mats = small_matrices();
    for (std::size_t i = 0; i < F.size(); ++i) {
        const BinQF f = F.key(i);
        const CoeffValue v = F.at(f);
        for (const auto& A : mats) {
            if (!(act(A, f) == f)) continue;
            ++rep.checks;
            if (!(act_value(A, F.character(), v) == v))
                note("stabilizer A=" + to_string(A) + " of " + to_string(f));
        }
    }
    if (F.size() == 0) return rep;
    std::uniform_int_distribution<std::size_t> pick(0, F.size() - 1);
    std::uniform_int_distribution<int> len(0, 6), gen(0, 2);
    for (int s = 0; s < samples; ++s) {
        const BinQF f = F.key(pick(rng));
        UnimodMat A = UnimodMat::identity();
        const int L = len(rng);
        for (int t = 0; t < L; ++t) A = A * gens[gen(rng)];
        const BinQF g = act(A, f);
        const CoeffValue lhs = direct ? direct(g) : F.coefficient(g);
        const CoeffValue rhs = act_value(A, F.character(), F.at(f));
        ++rep.checks;
        if (!(lhs == rhs)) note("A=" + to_string(A) + " f=" + to_string(f));
    }
    return rep;
}

}  // namespace smf
