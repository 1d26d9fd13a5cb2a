#include "smf/theta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "smf/arith.hpp"
#include "smf/errors.hpp"

namespace smf {

namespace {

Integer bareiss_det(int n, std::vector<Integer> m)
{
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        prev = m[k * n + k];
    }
    return sign * m[(n - 1) * n + (n - 1)];
}

Integer leading_minor(const std::vector<std::int64_t>& G, int n, int m)
{
    std::vector<Integer> sub(static_cast<std::size_t>(m * m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub[i * m + j] = Integer(static_cast<long>(G[i * n + j]));
    return bareiss_det(m, std::move(sub));
}

Lattice from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<std::int64_t> G(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) G[i * n + i] = 2;
    for (auto [i, j] : edges) G[i * n + j] = G[j * n + i] = -1;
    return Lattice(n, G);
}

}  // namespace

Lattice::Lattice(int n, std::vector<std::int64_t> g) : n_(n), G_(std::move(g))
{
    if (n < 1 || G_.size() != static_cast<std::size_t>(n * n)) fail("InvalidLattice", "Gram matrix size");
    for (int i = 0; i < n; ++i) {
        if (gram(i, i) % 2 != 0) fail("InvalidLattice", "odd diagonal entry");
        for (int j = 0; j < n; ++j)
            if (gram(i, j) != gram(j, i)) fail("InvalidLattice", "Gram matrix not symmetric");
    }
    for (int m = 1; m <= n; ++m)
        if (leading_minor(G_, n, m) <= 0) fail("InvalidLattice", "Gram matrix not positive definite");
}

std::int64_t Lattice::q(const std::int64_t* v) const { return pairing(v, v) / 2; }

std::int64_t Lattice::pairing(const std::int64_t* v, const std::int64_t* w) const
{
    std::int64_t s = 0;
    for (int i = 0; i < n_; ++i) {
        if (v[i] == 0) continue;
        std::int64_t t = 0;
        for (int j = 0; j < n_; ++j) t += gram(i, j) * w[j];
        s += v[i] * t;
    }
    return s;
}

Integer Lattice::determinant() const { return leading_minor(G_, n_, n_); }

Lattice Lattice::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail("IOError", "cannot open " + path);
    int n = 0;
    if (!(in >> n) || n < 1) fail("InvalidLattice", "bad rank in " + path);
    std::vector<std::int64_t> G(static_cast<std::size_t>(n * n));
    for (auto& g : G)
        if (!(in >> g)) fail("InvalidLattice", "short Gram matrix in " + path);
    return Lattice(n, std::move(G));
}

Lattice lattice_e8()
{
    return from_edges(8, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}});
}

Lattice lattice_a1a1() { return Lattice(2, {2, 0, 0, 2}); }
Lattice lattice_a2() { return Lattice(2, {2, 1, 1, 2}); }
Lattice lattice_d4() { return from_edges(4, {{0, 1}, {1, 2}, {1, 3}}); }
Lattice lattice_e6() { return from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}); }

Lattice lattice_e6_star()
{
    // adjugate of E6, which is 3 E6^-1 since det E6 = 3
    const Lattice e6 = lattice_e6();
    const int n = 6;
    std::vector<std::int64_t> adj(36);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Integer> m;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0; c < n; ++c)
                    if (c != i) m.emplace_back(static_cast<long>(e6.gram(r, c)));
            }
            Integer d = bareiss_det(n - 1, m);
            if ((i + j) % 2) d = -d;
            adj[i * n + j] = d.get_si();
        }
    return Lattice(n, adj);
}

Lattice lattice_z2_scaled() { return Lattice(2, {2, 0, 0, 2}); }

Lattice lattice_s4() { return Lattice(4, {2, 0, 3, 0, 0, 2, 0, 3, 3, 0, 6, 0, 0, 3, 0, 6}); }

// ------------------------------------------------------------ short vectors

namespace {

// Fincke-Pohst: q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, coordinates
// fixed from the last one down. Floating bounds only prune; q is exact.
template <class Fn>
class ShortVectorWalk {
public:
    ShortVectorWalk(const Lattice& L, std::int64_t tmax, Fn& fn)
        : L_(L), n_(L.rank()), tmax_(tmax), fn_(fn), d_(n_), mu_(n_ * n_, 0.0), x_(n_, 0), lin_(n_, 0)
    {
        for (int i = 0; i < n_; ++i) {
            double di = L.gram(i, i) / 2.0;
            for (int k = 0; k < i; ++k) di -= d_[k] * mu_[k * n_ + i] * mu_[k * n_ + i];
            d_[i] = di;
            for (int j = i + 1; j < n_; ++j) {
                double m = L.gram(i, j) / 2.0;
                for (int k = 0; k < i; ++k) m -= d_[k] * mu_[k * n_ + i] * mu_[k * n_ + j];
                mu_[i * n_ + j] = m / di;
            }
        }
        slack_ = 1e-7 * (1.0 + static_cast<double>(tmax));
    }

    void run() { level(n_ - 1, static_cast<double>(tmax_), 0, true); }

private:
    void level(int i, double budget, std::int64_t qpart, bool allzero)
    {
        if (i < 0) {
            if (!allzero && qpart <= tmax_) fn_(x_.data(), qpart);
            return;
        }
        double center = 0;
        for (int j = i + 1; j < n_; ++j) center -= mu_[i * n_ + j] * static_cast<double>(x_[j]);
        const double rad = std::sqrt(std::max(budget, 0.0) / d_[i]) + 1e-7;
        auto lo = static_cast<std::int64_t>(std::ceil(center - rad));
        const auto hi = static_cast<std::int64_t>(std::floor(center + rad));
        if (allzero) lo = std::max<std::int64_t>(lo, 0);
        const std::int64_t gii = L_.gram(i, i);
        const std::int64_t before = lin_[i];
        for (std::int64_t xi = lo; xi <= hi; ++xi) {
            const double t = d_[i] * (static_cast<double>(xi) - center) * (static_cast<double>(xi) - center);
            if (t > budget + slack_) continue;
            const std::int64_t q = qpart + gii / 2 * xi * xi + xi * before;
            x_[i] = xi;
            if (xi != 0)
                for (int k = 0; k < n_; ++k) lin_[k] += L_.gram(k, i) * xi;
            level(i - 1, budget - t, q, allzero && xi == 0);
            if (xi != 0)
                for (int k = 0; k < n_; ++k) lin_[k] -= L_.gram(k, i) * xi;
        }
        x_[i] = 0;
    }

    const Lattice& L_;
    int n_;
    std::int64_t tmax_;
    Fn& fn_;
    std::vector<double> d_, mu_;
    std::vector<std::int64_t> x_, lin_;
    double slack_ = 0;
};

template <class Fn>
void walk_short_vectors(const Lattice& L, std::int64_t tmax, Fn&& fn)
{
    if (tmax < 1) return;
    ShortVectorWalk<std::remove_reference_t<Fn>> w(L, tmax, fn);
    w.run();
}

}  // namespace

void for_each_short_vector(const Lattice& L, std::int64_t tmax,
                           const std::function<void(const std::int64_t*, std::int64_t)>& fn)
{
    walk_short_vectors(L, tmax, fn);
}

std::vector<std::vector<std::vector<std::int64_t>>> short_vectors_half(const Lattice& L, std::int64_t tmax)
{
    std::vector<std::vector<std::vector<std::int64_t>>> out(static_cast<std::size_t>(std::max<std::int64_t>(tmax, 0) + 1));
    const int n = L.rank();
    walk_short_vectors(L, tmax, [&](const std::int64_t* v, std::int64_t t) { out[t].emplace_back(v, v + n); });
    return out;
}

std::vector<std::vector<std::vector<std::int64_t>>> short_vectors(const Lattice& L, std::int64_t tmax)
{
    auto out = short_vectors_half(L, tmax);
    if (out.empty()) return out;
    for (auto& list : out) {
        const std::size_t m = list.size();
        for (std::size_t i = 0; i < m; ++i) {
            auto w = list[i];
            for (auto& x : w) x = -x;
            list.push_back(std::move(w));
        }
    }
    out[0].emplace_back(static_cast<std::size_t>(L.rank()), 0);
    return out;
}

// ------------------------------------------------------------- theta series

FormalSMF theta_series(const Lattice& L, std::int64_t X)
{
    const int n = L.rank();
    FormalSMF F(X, Character::One, Module::scalar(), Weight::of(make_rational(n, 2)));
    const auto idx = PrecisionIndex::get(X);
    const std::int64_t cmax = idx->max_c();
    std::int64_t A = 0;
    while (3 * (A + 1) * (A + 1) <= X) ++A;

    // half lists for the small norms, one row per coordinate, in int16 and int32
    std::vector<std::vector<std::vector<std::int32_t>>> soa(static_cast<std::size_t>(A + 1),
                                                            std::vector<std::vector<std::int32_t>>(n));
    walk_short_vectors(L, A, [&](const std::int64_t* v, std::int64_t t) {
        for (int k = 0; k < n; ++k) soa[t][k].push_back(static_cast<std::int32_t>(v[k]));
    });
    std::vector<std::vector<std::vector<std::int16_t>>> soa16(static_cast<std::size_t>(A + 1),
                                                              std::vector<std::vector<std::int16_t>>(n));
    std::vector<std::vector<std::int64_t>> rowmax(static_cast<std::size_t>(A + 1), std::vector<std::int64_t>(n, 0));
    for (std::int64_t a = 1; a <= A; ++a)
        for (int k = 0; k < n; ++k) {
            for (std::int32_t x : soa[a][k]) rowmax[a][k] = std::max<std::int64_t>(rowmax[a][k], std::abs(x));
            if (rowmax[a][k] <= 32767) soa16[a][k].assign(soa[a][k].begin(), soa[a][k].end());
        }

    // slot[(a, c)][b] -> key position for b in 0..a
    auto slot_base = [&](std::int64_t a, std::int64_t c) { return (a * (cmax + 1) + c) * (A + 1); };
    std::vector<std::ptrdiff_t> slot(static_cast<std::size_t>((A + 1) * (cmax + 1) * (A + 1)), -1);
    for (std::int64_t a = 1; a <= A; ++a)
        for (std::int64_t c = a; c <= cmax; ++c)
            for (std::int64_t b = 0; b <= a; ++b)
                slot[slot_base(a, c) + b] = idx->position({a, b, c});

    std::vector<std::int64_t> count(idx->size(), 0);
    std::vector<std::int64_t> half(static_cast<std::size_t>(cmax + 1), 0);
    std::vector<std::int64_t> gw(static_cast<std::size_t>(n));
    std::vector<std::int32_t> dots;
    std::vector<std::int16_t> dots16;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(2 * A + 1));

    auto histogram = [&](const auto& rows, auto& d, std::int64_t a, std::int64_t c) {
        using T = typename std::remove_reference_t<decltype(d)>::value_type;
        const std::size_t m = rows[0].size();
        d.assign(m, 0);
        for (int k = 0; k < n; ++k) {
            const T g = static_cast<T>(gw[k]);
            if (g == 0) continue;
            const T* r = rows[k].data();
            T* dd = d.data();
            for (std::size_t i = 0; i < m; ++i) dd[i] = static_cast<T>(dd[i] + g * r[i]);
        }
        for (std::int64_t b = -a; b <= a; ++b) {
            hist[b + a] = 0;
            if (4 * a * c - b * b > X) continue;
            const T tb = static_cast<T>(b);
            const T* dd = d.data();
            std::int32_t h = 0;
            for (std::size_t i = 0; i < m; ++i) h += dd[i] == tb;
            hist[b + a] = h;
        }
    };

    walk_short_vectors(L, cmax, [&](const std::int64_t* w, std::int64_t c) {
        ++half[c];
        bool any = false;
        for (std::int64_t a = 1; a <= std::min(A, c); ++a) {
            if (4 * a * c - a * a > X) break;
            if (!any) {
                for (int k = 0; k < n; ++k) {
                    std::int64_t s = 0;
                    for (int l = 0; l < n; ++l) s += L.gram(k, l) * w[l];
                    gw[k] = s;
                }
                any = true;
            }
            if (soa[a][0].empty()) continue;
            // partial sums stay below sum_k |g_k| max|v_k|
            std::int64_t bound = 0;
            for (int k = 0; k < n; ++k) bound += std::abs(gw[k]) * rowmax[a][k];
            if (bound <= 32767)
                histogram(soa16[a], dots16, a, c);
            else if (bound <= 2147483647)
                histogram(soa[a], dots, a, c);
            else
                fail("Overflow", "theta series inner products");
            for (std::int64_t b = -a; b <= a; ++b) {
                const std::int64_t h = hist[b + a];
                if (h == 0 || 4 * a * c - b * b > X) continue;
                const std::ptrdiff_t p = slot[slot_base(a, c) + (b < 0 ? -b : b)];
                count[p] += (b == 0 ? 4 : 2) * h;
            }
        }
    });

    for (std::size_t i = 0; i < idx->size(); ++i) {
        const BinQF& f = idx->forms()[i];
        Rational v;
        if (f.a == 0)
            v = f.c == 0 ? Rational(1) : Rational(Integer(static_cast<long>(2 * half[f.c])));
        else
            v = Rational(Integer(static_cast<long>(count[i])));
        F.data(i)[0] = v;
    }
    return F;
}

// ---------------------------------------------------------- theta constants

std::string ThetaChar::name() const
{
    return std::to_string(a1) + std::to_string(a2) + std::to_string(b1) + std::to_string(b2);
}

namespace {

struct SignedSquare {
    BinQF f;
    int sign;
};

// Squares l^2 = [l1^2, 2 l1 l2, l2^2] of l = a mod N with l1^2 <= A, l2^2 <= C, with
// the sign e(l.b / N^2) (required to be +-1).
std::vector<SignedSquare> signed_squares(int N, const ThetaChar& ch, std::int64_t A, std::int64_t C)
{
    const std::int64_t N2 = static_cast<std::int64_t>(N) * N;
    auto residues = [&](int r, std::int64_t bound) {
        std::vector<std::int64_t> out;
        const std::int64_t m = isqrt(bound);
        for (std::int64_t l = -m; l <= m; ++l)
            if (((l - r) % N + N) % N == 0) out.push_back(l);
        return out;
    };
    std::vector<SignedSquare> out;
    for (std::int64_t l1 : residues(ch.a1, A))
        for (std::int64_t l2 : residues(ch.a2, C)) {
            const std::int64_t t = ((l1 * ch.b1 + l2 * ch.b2) % N2 + N2) % N2;
            int sign;
            if (t == 0)
                sign = 1;
            else if (2 * t == N2)
                sign = -1;
            else
                fail("IrrationalCoefficient", "theta_" + ch.name() + " at level " + std::to_string(N));
            out.push_back({{l1 * l1, 2 * l1 * l2, l2 * l2}, sign});
        }
    return out;
}

void check_even(const ThetaChar& ch, const char* err)
{
    if (!ch.even()) fail(err, "theta_" + ch.name() + " has odd a.b");
}

// Dense int64 table over psd forms with a <= A, c <= C.
class IntBox {
public:
    IntBox(std::int64_t A, std::int64_t C) : A_(A), C_(C), start_(static_cast<std::size_t>((A + 1) * (C + 1)))
    {
        std::int64_t s = 0;
        for (std::int64_t a = 0; a <= A; ++a)
            for (std::int64_t c = 0; c <= C; ++c) {
                const std::int64_t r = isqrt(4 * a * c);
                start_[a * (C + 1) + c] = s + r;
                s += 2 * r + 1;
            }
        data_.assign(static_cast<std::size_t>(s), 0);
    }

    static IntBox unit(std::int64_t A, std::int64_t C)
    {
        IntBox b(A, C);
        b.at(0, 0, 0) = 1;
        return b;
    }

    std::int64_t max_a() const { return A_; }
    std::int64_t max_c() const { return C_; }
    std::int64_t& at(std::int64_t a, std::int64_t b, std::int64_t c) { return data_[start_[a * (C_ + 1) + c] + b]; }
    std::int64_t at(std::int64_t a, std::int64_t b, std::int64_t c) const
    {
        return data_[start_[a * (C_ + 1) + c] + b];
    }

    template <class Fn>
    void for_each_nonzero(Fn&& fn) const
    {
        for (std::int64_t a = 0; a <= A_; ++a)
            for (std::int64_t c = 0; c <= C_; ++c) {
                const std::int64_t r = isqrt(4 * a * c);
                const std::int64_t* row = data_.data() + start_[a * (C_ + 1) + c];
                for (std::int64_t b = -r; b <= r; ++b)
                    if (row[b] != 0) fn(a, b, c, row[b]);
            }
    }

    IntBox times(const std::vector<SignedSquare>& sq) const
    {
        IntBox out(A_, C_);
        for_each_nonzero([&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t v) {
            for (const auto& s : sq) {
                const std::int64_t na = a + s.f.a, nc = c + s.f.c;
                if (na > A_ || nc > C_) continue;
                std::int64_t& dst = out.at(na, b + s.f.b, nc);
                if (__builtin_add_overflow(dst, s.sign > 0 ? v : -v, &dst)) fail("Overflow", "theta product");
            }
        });
        return out;
    }

private:
    std::int64_t A_, C_;
    std::vector<std::int64_t> start_;
    std::vector<std::int64_t> data_;
};

Integer from_i128(__int128 x)
{
    const bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

IntBox product_box(const std::vector<ThetaChar>& factors, std::int64_t A, std::int64_t C)
{
    IntBox box = IntBox::unit(A, C);
    for (const auto& ch : factors) box = box.times(signed_squares(2, ch, A, C));
    return box;
}

std::string factor_key(const std::vector<ThetaChar>& fs)
{
    std::string k;
    for (const auto& ch : fs) k += ch.name() + ",";
    return k;
}

}  // namespace

RawFourier theta_constant_raw(const ThetaChar& ch, std::int64_t A, std::int64_t C)
{
    check_even(ch, "ZeroConstant");
    return theta_constant_raw_level(2, ch, A, C);
}

RawFourier theta_constant_raw_level(int N, const ThetaChar& ch, std::int64_t A, std::int64_t C)
{
    if (N < 2) fail("BadLevel", std::to_string(N));
    for (int e : {ch.a1, ch.a2, ch.b1, ch.b2})
        if (e < 0 || e >= N) fail("BadCharacteristic", ch.name());
    if (N == 2) check_even(ch, "ZeroConstant");
    RawFourier raw(A, C);
    for (const auto& s : signed_squares(N, ch, A, C)) raw.add_to(s.f, Rational(s.sign));
    return raw;
}

RawFourier theta_product(const std::vector<ThetaTerm>& terms, std::int64_t A, std::int64_t C)
{
    for (const auto& t : terms)
        for (const auto& ch : t.factors) check_even(ch, "OddPairing");
    RawFourier raw(A, C);
    for (const auto& t : terms) {
        const IntBox box = product_box(t.factors, A, C);
        box.for_each_nonzero([&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t v) {
            raw.add_to({a, b, c}, t.alpha * Rational(Integer(static_cast<long>(v))));
        });
    }
    return raw;
}

RawFourier theta_product_at(const std::vector<ThetaTerm>& terms, const std::vector<BinQF>& targets)
{
    for (const auto& t : terms)
        for (const auto& ch : t.factors) check_even(ch, "OddPairing");
    std::int64_t A = 0, C = 0;
    for (const auto& g : targets) {
        if (!is_psd(g)) fail("NotPositiveSemidefinite", to_string(g));
        A = std::max(A, g.a);
        C = std::max(C, g.c);
    }
    RawFourier raw(A, C);
    std::map<BinQF, Rational> acc;
    std::map<std::string, IntBox> cache;
    auto half_box = [&](const std::vector<ThetaChar>& fs) -> const IntBox& {
        const std::string key = factor_key(fs);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, product_box(fs, A, C)).first;
        return it->second;
    };
    for (const auto& t : terms) {
        const std::size_t d = t.factors.size();
        const std::size_t h = d / 2;
        const std::vector<ThetaChar> f1(t.factors.begin(), t.factors.begin() + static_cast<std::ptrdiff_t>(d - h));
        const std::vector<ThetaChar> f2(t.factors.begin() + static_cast<std::ptrdiff_t>(d - h), t.factors.end());
        const IntBox& H1 = half_box(f1);
        const IntBox& H2 = half_box(f2);
        for (const auto& g : targets) {
            __int128 s = 0;
            for (std::int64_t a1 = 0; a1 <= g.a; ++a1)
                for (std::int64_t c1 = 0; c1 <= g.c; ++c1) {
                    const auto [lo, hi] = summand_b_range(g, a1, c1);
                    for (std::int64_t b1 = lo; b1 <= hi; ++b1) {
                        const std::int64_t x = H1.at(a1, b1, c1);
                        if (x == 0) continue;
                        const std::int64_t y = H2.at(g.a - a1, g.b - b1, g.c - c1);
                        if (y != 0) s += static_cast<__int128>(x) * y;
                    }
                }
            acc[g] += t.alpha * Rational(from_i128(s));
        }
    }
    for (const auto& [g, v] : acc)
        if (v != 0) raw.add_to(g, v);
    return raw;
}

Rational theta_product_literal(const std::vector<ThetaTerm>& terms, const BinQF& f)
{
    Rational total = 0;
    for (const auto& t : terms) {
        for (const auto& ch : t.factors) check_even(ch, "OddPairing");
        std::vector<std::vector<SignedSquare>> lists;
        for (const auto& ch : t.factors) lists.push_back(signed_squares(2, ch, f.a, f.c));
        std::int64_t count = 0;
        std::function<void(std::size_t, BinQF, int)> rec = [&](std::size_t i, BinQF rest, int sign) {
            if (i == lists.size()) {
                if (rest == BinQF{0, 0, 0}) count += sign;
                return;
            }
            for (const auto& s : lists[i]) {
                const BinQF r = rest - s.f;
                if (r.a < 0 || r.c < 0 || !is_psd(r)) continue;
                rec(i + 1, r, sign * s.sign);
            }
        };
        rec(0, f, 1);
        total += t.alpha * Rational(Integer(static_cast<long>(count)));
    }
    return total;
}

FormalSMF theta_product_form(const std::vector<ThetaTerm>& terms, std::int64_t d, std::int64_t X, Weight w)
{
    if (d < 1 || 8 % d != 0) fail("BadScale", std::to_string(d));
    // nothing off d Q on a small box
    contract_index(theta_product(terms, 2 * d, 2 * d), d);

    const auto idx = PrecisionIndex::get(X);
    std::set<BinQF> targets;
    const UnimodMat gens[3] = {UnimodMat::S(), UnimodMat::T(), UnimodMat::E()};
    for (const auto& f : idx->forms()) {
        targets.insert(f.scaled(d));
        for (const auto& A : gens) targets.insert(act(A, f).scaled(d));
    }
    const RawFourier raw = theta_product_at(terms, {targets.begin(), targets.end()});
    return promote(contract_index(raw, d), X, w);
}

// ------------------------------------------------ vector-valued theta series

namespace {

QI pairing_with(const std::int64_t* x, const std::vector<QI>& Gv)
{
    QI s;
    for (std::size_t i = 0; i < Gv.size(); ++i)
        if (x[i] != 0) {
            const Rational xi(Integer(static_cast<long>(x[i])));
            s.re += xi * Gv[i].re;
            s.im += xi * Gv[i].im;
        }
    return s;
}

std::vector<QI> gram_times(const Lattice& L, const std::vector<QI>& a)
{
    const int n = L.rank();
    if (static_cast<int>(a.size()) != n) fail("DimensionMismatch", "isotropic vector has wrong length");
    std::vector<QI> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational g(Integer(static_cast<long>(L.gram(i, j))));
            out[i].re += g * a[j].re;
            out[i].im += g * a[j].im;
        }
    return out;
}

QI dot(const std::vector<QI>& u, const std::vector<QI>& v)
{
    QI s;
    for (std::size_t i = 0; i < u.size(); ++i) s = s + u[i] * v[i];
    return s;
}

QI qi_pow(QI x, int e)
{
    QI r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

std::vector<QI> Pluriharmonic::at_pairings(const QI& al, const QI& be, const QI& alb, const QI& beb) const
{
    std::vector<QI> out(static_cast<std::size_t>(j + 1));
    QI twist(1);
    if (!Gb.empty()) twist = qi_pow(al * beb - be * alb, k);
    for (int i = 0; i <= j; ++i)
        out[i] = QI(Rational(binomial(j, i))) * qi_pow(al, j - i) * qi_pow(be, i) * twist;
    return out;
}

std::vector<QI> Pluriharmonic::eval(const std::int64_t* x, const std::int64_t* y) const
{
    const QI al = pairing_with(x, Ga), be = pairing_with(y, Ga);
    if (Gb.empty()) return at_pairings(al, be, QI(), QI());
    return at_pairings(al, be, pairing_with(x, Gb), pairing_with(y, Gb));
}

Pluriharmonic make_P_a(const Lattice& L, const std::vector<QI>& a, int j)
{
    if (j < 0) fail("BadDegree", std::to_string(j));
    Pluriharmonic P;
    P.j = j;
    P.Ga = gram_times(L, a);
    if (!dot(a, P.Ga).is_zero()) fail("NotIsotropic", "(a,a) != 0");
    return P;
}

Pluriharmonic make_P_ab(const Lattice& L, const std::vector<QI>& a, const std::vector<QI>& b, int j, int k)
{
    if (k < 0) fail("BadDegree", std::to_string(k));
    Pluriharmonic P = make_P_a(L, a, j);
    P.k = k;
    P.Gb = gram_times(L, b);
    if (!dot(a, P.Gb).is_zero()) fail("NotIsotropic", "(a,b) != 0");
    if (!dot(b, P.Gb).is_zero()) fail("NotIsotropic", "(b,b) != 0");
    return P;
}

namespace {

// Pairings scaled to Gaussian integers: D (u, a) = u . ga where ga is integral.
struct ScaledPairings {
    Integer D = 1;
    std::vector<std::int64_t> re[2], im[2];
    bool has_b = false;

    ScaledPairings(const Pluriharmonic& P)
    {
        has_b = !P.Gb.empty();
        for (const auto* v : {&P.Ga, &P.Gb})
            for (const auto& z : *v) {
                D = lcm(D, z.re.get_den());
                D = lcm(D, z.im.get_den());
            }
        for (int s = 0; s < 2; ++s) {
            const auto& v = s == 0 ? P.Ga : P.Gb;
            for (const auto& z : v) {
                const Rational r = z.re * D, i = z.im * D;
                if (!r.get_num().fits_slong_p() || !i.get_num().fits_slong_p())
                    fail("Overflow", "isotropic vector too large");
                re[s].push_back(r.get_num().get_si());
                im[s].push_back(i.get_num().get_si());
            }
        }
    }

    // (Re, Im) of D (x, a) and D (x, b)
    std::array<std::int64_t, 4> of(const std::int64_t* x) const
    {
        std::array<std::int64_t, 4> out{0, 0, 0, 0};
        for (int s = 0; s < (has_b ? 2 : 1); ++s)
            for (std::size_t i = 0; i < re[s].size(); ++i) {
                out[2 * s] += x[i] * re[s][i];
                out[2 * s + 1] += x[i] * im[s][i];
            }
        return out;
    }
};

// sum of P(x, y) over the pairs collected as (pairings of x, pairings of y) -> count
using PairKey = std::array<std::int64_t, 8>;

std::vector<QI> sum_over(const Pluriharmonic& P, const ScaledPairings& sp, const std::map<PairKey, std::int64_t>& m)
{
    std::vector<QI> out(static_cast<std::size_t>(P.j + 1));
    const Rational invD = Rational(1) / Rational(sp.D);
    auto z = [&](std::int64_t r, std::int64_t i) {
        return QI(Rational(Integer(static_cast<long>(r))) * invD, Rational(Integer(static_cast<long>(i))) * invD);
    };
    for (const auto& [k, cnt] : m) {
        const auto v = P.at_pairings(z(k[0], k[1]), z(k[4], k[5]), z(k[2], k[3]), z(k[6], k[7]));
        const QI c(Rational(Integer(static_cast<long>(cnt))));
        for (int i = 0; i <= P.j; ++i) out[i] = out[i] + c * v[i];
    }
    return out;
}

void collect_pairs(const Lattice& L, const ScaledPairings& sp, const std::vector<std::vector<std::int64_t>>& Va,
                   const std::vector<std::vector<std::int64_t>>& Vc, const std::function<void(std::int64_t b, const PairKey&)>& fn)
{
    const int n = L.rank();
    std::vector<std::array<std::int64_t, 4>> pc;
    pc.reserve(Vc.size());
    for (const auto& y : Vc) pc.push_back(sp.of(y.data()));
    std::vector<std::int64_t> gx(static_cast<std::size_t>(n));
    for (const auto& x : Va) {
        for (int k = 0; k < n; ++k) {
            std::int64_t s = 0;
            for (int l = 0; l < n; ++l) s += L.gram(k, l) * x[l];
            gx[k] = s;
        }
        const auto px = sp.of(x.data());
        for (std::size_t iy = 0; iy < Vc.size(); ++iy) {
            const auto& y = Vc[iy];
            std::int64_t b = 0;
            for (int k = 0; k < n; ++k) b += gx[k] * y[k];
            PairKey key;
            for (int t = 0; t < 4; ++t) {
                key[t] = px[t];
                key[4 + t] = pc[iy][t];
            }
            fn(b, key);
        }
    }
}

CoeffValue to_value(int j, const std::vector<QI>& v, bool imag)
{
    CoeffValue out(Module::poly(j));
    for (int i = 0; i <= j; ++i) out.v[i] = imag ? v[i].im : v[i].re;
    return out;
}

}  // namespace

VVTheta vv_theta(const Lattice& L, const Pluriharmonic& P, std::int64_t X)
{
    const int n = L.rank();
    const Weight w = Weight::of(make_rational(n, 2) + P.k, P.j);
    const Character chi = det_power(P.k);
    VVTheta out{FormalSMF(X, chi, Module::poly(P.j), w), FormalSMF(X, chi, Module::poly(P.j), w)};
    const auto idx = PrecisionIndex::get(X);
    const auto V = short_vectors(L, idx->max_c());
    const ScaledPairings sp(P);

    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<BinQF>> by_ac;
    for (const auto& f : idx->forms()) by_ac[{f.a, f.c}].push_back(f);
    for (const auto& [ac, forms] : by_ac) {
        std::map<std::int64_t, std::map<PairKey, std::int64_t>> per_b;
        std::set<std::int64_t> wanted;
        for (const auto& f : forms) wanted.insert(f.b);
        collect_pairs(L, sp, V[ac.first], V[ac.second], [&](std::int64_t b, const PairKey& k) {
            if (wanted.count(b)) ++per_b[b][k];
        });
        for (const auto& f : forms) {
            const auto s = sum_over(P, sp, per_b[f.b]);
            out.re.set(f, to_value(P.j, s, false));
            out.im.set(f, to_value(P.j, s, true));
        }
    }
    return out;
}

std::vector<QI> vv_theta_direct(const Lattice& L, const Pluriharmonic& P, const BinQF& f)
{
    if (!is_psd(f)) fail("NotPositiveSemidefinite", to_string(f));
    const auto V = short_vectors(L, std::max(f.a, f.c));
    const ScaledPairings sp(P);
    std::map<PairKey, std::int64_t> m;
    collect_pairs(L, sp, V[f.a], V[f.c], [&](std::int64_t b, const PairKey& k) {
        if (b == f.b) ++m[k];
    });
    return sum_over(P, sp, m);
}

// ------------------------------------------------------------------ gamma_4

namespace {

std::int64_t gamma4_weight(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y)
{
    const std::int64_t c = (x[0] * y[2] - x[2] * y[0]) + (x[1] * y[3] - x[3] * y[1]);
    const std::int64_t d = (x[0] * y[3] - x[3] * y[0]) + (x[2] * y[1] - x[1] * y[2]);
    return c * c - d * d;
}

std::int64_t gamma4_sum(const Lattice& L, const std::vector<std::vector<std::int64_t>>& Va,
                        const std::vector<std::vector<std::int64_t>>& Vc, std::int64_t b)
{
    std::int64_t s = 0;
    for (const auto& x : Va)
        for (const auto& y : Vc)
            if (L.pairing(x.data(), y.data()) == b) s += gamma4_weight(x, y);
    return s;
}

}  // namespace

FormalSMF gamma4(std::int64_t X)
{
    const Lattice L = lattice_s4();
    FormalSMF F(X, Character::One, Module::scalar(), Weight::of(4));
    const auto idx = PrecisionIndex::get(X);
    const auto V = short_vectors(L, idx->max_c());
    for (std::size_t i = 0; i < idx->size(); ++i) {
        const BinQF& f = idx->forms()[i];
        F.data(i)[0] = Rational(Integer(static_cast<long>(gamma4_sum(L, V[f.a], V[f.c], f.b))));
    }
    return F;
}

Rational gamma4_direct(const BinQF& f)
{
    if (!is_psd(f)) fail("NotPositiveSemidefinite", to_string(f));
    const Lattice L = lattice_s4();
    const auto V = short_vectors(L, std::max(f.a, f.c));
    return Rational(Integer(static_cast<long>(gamma4_sum(L, V[f.a], V[f.c], f.b))));
}

}  // namespace smf
