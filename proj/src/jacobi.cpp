#include "smf/jacobi.hpp"

#include <cmath>

#include "smf/errors.hpp"

namespace smf {

std::int64_t LaurentQZ::isqrt_bound(std::int64_t m)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    while (r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    return r;
}

LaurentQZ::LaurentQZ(std::int64_t nmax) : nmax_(nmax)
{
    rows_.resize(static_cast<std::size_t>(nmax + 1));
    for (std::int64_t n = 0; n <= nmax; ++n) rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(2 * rbound(n) + 1));
}

Rational LaurentQZ::get(std::int64_t n, std::int64_t r) const
{
    if (n < 0 || n > nmax_) fail("OutOfPrecision", "q-power " + std::to_string(n));
    const std::int64_t R = rbound(n);
    if (r < -R || r > R) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + R)];
}

void LaurentQZ::add(std::int64_t n, std::int64_t r, const Rational& v)
{
    if (n < 0 || n > nmax_) return;
    const std::int64_t R = rbound(n);
    if (r < -R || r > R) fail("OutOfPrecision", "zeta-power outside the index-1 range");
    rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + R)] += v;
}

LaurentQZ LaurentQZ::times(const QSeries& h) const
{
    if (h.offset() != 0) fail("OffsetMismatch", "multiplier must have offset 0");
    if (static_cast<std::int64_t>(h.precision()) < nmax_ + 1) fail("OutOfPrecision", "multiplier too short");
    LaurentQZ out(nmax_);
    for (std::int64_t n = 0; n <= nmax_; ++n) {
        const std::int64_t R = rbound(n);
        for (std::int64_t m = 0; m <= n; ++m) {
            const Rational& hm = h[static_cast<std::size_t>(m)];
            if (hm == 0) continue;
            const auto& row = rows_[static_cast<std::size_t>(n - m)];
            const std::int64_t Rm = rbound(n - m);
            for (std::int64_t r = -Rm; r <= Rm; ++r) {
                const Rational& v = row[static_cast<std::size_t>(r + Rm)];
                if (v != 0) out.rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + R)] += hm * v;
            }
        }
    }
    return out;
}

LaurentQZ LaurentQZ::operator+(const LaurentQZ& o) const
{
    LaurentQZ out(std::min(nmax_, o.nmax_));
    for (std::int64_t n = 0; n <= out.nmax_; ++n)
        for (std::size_t i = 0; i < out.rows_[static_cast<std::size_t>(n)].size(); ++i)
            out.rows_[static_cast<std::size_t>(n)][i] = rows_[static_cast<std::size_t>(n)][i] + o.rows_[static_cast<std::size_t>(n)][i];
    return out;
}

LaurentQZ LaurentQZ::operator*(const Rational& s) const
{
    LaurentQZ out(*this);
    for (auto& row : out.rows_)
        for (auto& v : row) v *= s;
    return out;
}

namespace {

// sum over r != s mod 2 of w(s) (-1)^r q^((s^2+r^2-1)/4) zeta^r, before eta^-6
LaurentQZ theta_part(std::int64_t nmax, bool weight_s2)
{
    LaurentQZ L(nmax);
    const std::int64_t bound = 4 * nmax + 1;
    const std::int64_t B = LaurentQZ::rbound(nmax) + 1;
    for (std::int64_t r = -B; r <= B; ++r)
        for (std::int64_t s = -B; s <= B; ++s) {
            if ((r + s) % 2 == 0 || r * r + s * s > bound) continue;
            Rational v = weight_s2 ? Rational(s * s) : Rational(1);
            if (r % 2) v = -v;
            L.add((s * s + r * r - 1) / 4, r, v);
        }
    return L;
}

}  // namespace

LaurentQZ jacobi_A(std::int64_t nmax)
{
    const QSeries e = eta_pow(-6, static_cast<std::size_t>(nmax + 1));
    return theta_part(nmax, true).times(QSeries(e.coeffs()));
}

LaurentQZ jacobi_B(std::int64_t nmax)
{
    const QSeries e = eta_pow(-6, static_cast<std::size_t>(nmax + 1));
    return theta_part(nmax, false).times(QSeries(e.coeffs()));
}

namespace {

// The double sum with eta^-6 = q^(-1/4) sum_m p(m) q^m, p from the partition-type
// recursion for prod (1 - q^n)^-6 computed by repeated division.
LaurentQZ direct(std::int64_t nmax, bool weight_s2)
{
    std::vector<Rational> p(static_cast<std::size_t>(nmax + 1));
    p[0] = 1;
    for (int t = 0; t < 6; ++t)
        for (std::int64_t n = 1; n <= nmax; ++n)
            for (std::int64_t m = n; m <= nmax; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - n)];
    LaurentQZ L(nmax);
    for (std::int64_t r = -2 * nmax - 2; r <= 2 * nmax + 2; ++r)
        for (std::int64_t s = -2 * nmax - 2; s <= 2 * nmax + 2; ++s) {
            if ((r + s) % 2 == 0) continue;
            const std::int64_t e = (r * r + s * s - 1) / 4;
            for (std::int64_t m = 0; m + e <= nmax; ++m) {
                Rational v = p[static_cast<std::size_t>(m)] * (weight_s2 ? Rational(s * s) : Rational(1));
                if (r % 2) v = -v;
                L.add(m + e, r, v);
            }
        }
    return L;
}

}  // namespace

LaurentQZ jacobi_A_direct(std::int64_t nmax) { return direct(nmax, true); }
LaurentQZ jacobi_B_direct(std::int64_t nmax) { return direct(nmax, false); }

Rational JacobiIdx1::by_disc(std::int64_t D, int rho) const
{
    if (D < 0) return 0;
    if (D > Dmax_) fail("OutOfPrecision", "Jacobi discriminant " + std::to_string(D) + " > " + std::to_string(Dmax_));
    auto it = m_.find({D, rho & 1});
    return it == m_.end() ? Rational(0) : it->second;
}

Rational JacobiIdx1::d(std::int64_t n, std::int64_t r) const
{
    return by_disc(4 * n - r * r, static_cast<int>(((r % 2) + 2) % 2));
}

void JacobiIdx1::set(std::int64_t D, int rho, const Rational& v)
{
    if (v == 0) m_.erase({D, rho});
    else m_[{D, rho}] = v;
}

JacobiIdx1 recollect(const LaurentQZ& L, long k)
{
    const std::int64_t nmax = L.nmax();
    JacobiIdx1 J(k, 4 * nmax);
    std::map<std::pair<std::int64_t, int>, bool> seen;
    for (std::int64_t n = 0; n <= nmax; ++n) {
        const std::int64_t R = LaurentQZ::rbound(n);
        for (std::int64_t r = -R; r <= R; ++r) {
            const Rational v = L.get(n, r);
            const std::int64_t D = 4 * n - r * r;
            const int rho = static_cast<int>(((r % 2) + 2) % 2);
            if (D < 0) {
                if (v != 0)
                    fail("InconsistentIndexLaw", "nonzero coefficient at n=" + std::to_string(n) + " r=" + std::to_string(r));
                continue;
            }
            const auto key = std::make_pair(D, rho);
            if (seen.count(key)) {
                if (J.by_disc(D, rho) != v)
                    fail("InconsistentIndexLaw", "conflict at n=" + std::to_string(n) + " r=" + std::to_string(r));
                continue;
            }
            seen[key] = true;
            J.set(D, rho, v);
        }
    }
    return J;
}

LaurentQZ skoruppa_I_laurent(const QSeries& f, const QSeries& g, long k, std::int64_t nmax)
{
    const LaurentQZ A = jacobi_A(nmax), B = jacobi_B(nmax);
    const QSeries fz = f.truncated(static_cast<std::size_t>(nmax + 1));
    const QSeries gz = g.truncated(static_cast<std::size_t>(nmax + 1));
    return A.times(fz) * make_rational(k, 2) + B.times(fz.derivative()) * Rational(-1) + B.times(gz);
}

JacobiIdx1 skoruppa_I(const QSeries& f, const QSeries& g, long k, std::int64_t nmax)
{
    return recollect(skoruppa_I_laurent(f, g, k, nmax), k);
}

}  // namespace smf
