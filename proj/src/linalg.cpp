#include "smf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>

#include "smf/errors.hpp"

namespace smf {

RMatrix RMatrix::identity(std::size_t n)
{
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVec>& rows)
{
    if (rows.empty()) return {};
    RMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) fail("DimensionMismatch", "ragged rows");
        for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RVec RMatrix::row(std::size_t i) const { return RVec(d_.begin() + static_cast<std::ptrdiff_t>(i * c_), d_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_)); }

RMatrix RMatrix::operator*(const RMatrix& o) const
{
    if (c_ != o.r_) fail("DimensionMismatch", "matrix product");
    RMatrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += a * o(k, j);
        }
    return m;
}

RMatrix RMatrix::operator+(const RMatrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_) fail("DimensionMismatch", "matrix sum");
    RMatrix m = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] += o.d_[i];
    return m;
}

RMatrix RMatrix::operator-(const RMatrix& o) const { return *this + o * Rational(-1); }

RMatrix RMatrix::operator*(const Rational& s) const
{
    RMatrix m = *this;
    for (auto& x : m.d_) x *= s;
    return m;
}

RMatrix RMatrix::transpose() const
{
    RMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

std::string to_string(const RMatrix& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    }
    os << "]";
    return os.str();
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& m)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

std::size_t rank(RMatrix m) { return rref(m).size(); }

Rational determinant(RMatrix m)
{
    if (m.rows() != m.cols()) fail("DimensionMismatch", "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

RMatrix inverse(const RMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) fail("DimensionMismatch", "inverse of a non-square matrix");
    RMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) fail("Singular", "matrix is not invertible");
    RMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<RVec> nullspace(const RMatrix& m)
{
    RMatrix r = m;
    const auto piv = rref(r);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<RVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        RVec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

RVec solve(const RMatrix& m, const RVec& b)
{
    if (b.size() != m.rows()) fail("DimensionMismatch", "right-hand side length");
    RMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) fail("Inconsistent", "no solution");
    RVec x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
    return x;
}

RPoly charpoly(const RMatrix& m)
{
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    const std::size_t n = m.rows();
    if (m.cols() != n) fail("DimensionMismatch", "charpoly of a non-square matrix");
    RPoly c(n + 1);
    c[n] = 1;
    RMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = m * M + RMatrix::identity(n) * c[n - k + 1];
        const RMatrix AM = m * M;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

Rational poly_eval(const RPoly& p, const Rational& x)
{
    Rational s = 0;
    for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
    return s;
}

RPoly deflate(const RPoly& p, const Rational& r)
{
    if (p.size() < 2) fail("DomainError", "cannot deflate a constant");
    RPoly q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        carry = carry * r + p[i + 1];
        q[i] = carry;
    }
    if (carry * r + p[0] != 0) fail("DomainError", "not a root");
    return q;
}

std::vector<Rational> rational_roots(const RPoly& p0, RPoly* rest)
{
    RPoly p = p0;
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    std::vector<Rational> roots;
    while (p.size() > 1 && p[0] == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    // candidates from numerical roots (Durand-Kerner), confirmed exactly
    bool found = true;
    while (found && p.size() > 1) {
        found = false;
        const std::size_t n = p.size() - 1;
        std::vector<std::complex<long double>> a(n + 1);
        for (std::size_t i = 0; i <= n; ++i) a[i] = static_cast<long double>(Rational(p[i] / p[n]).get_d());
        std::vector<std::complex<long double>> z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(std::complex<long double>(0.4L, 0.9L), static_cast<long double>(i));
        long double scale = 1;
        for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, 1 + std::abs(a[i]));
        for (auto& zi : z) zi *= scale;
        for (int it = 0; it < 2000; ++it) {
            long double delta = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::complex<long double> num = 0;
                for (std::size_t k = n + 1; k-- > 0;) num = num * z[i] + a[k];
                std::complex<long double> den = 1;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) den *= z[i] - z[j];
                if (std::abs(den) == 0) den = 1e-30L;
                const auto step = num / den;
                z[i] -= step;
                delta = std::max(delta, std::abs(step) / (1 + std::abs(z[i])));
            }
            if (delta < 1e-18L) break;
        }
        // rational candidates with small denominators near the real parts
        std::set<Rational> tried;
        for (const auto& zi : z) {
            const long double x = zi.real();
            for (long q = 1; q <= 64 && !found; ++q) {
                for (long d = -1; d <= 1 && !found; ++d) {
                    const long double num = std::round(x * q) + d;
                    if (!std::isfinite(static_cast<double>(num)) || std::fabs(static_cast<double>(num)) > 9e15) continue;
                    const Rational r = make_rational(static_cast<std::int64_t>(num), q);
                    if (!tried.insert(r).second) continue;
                    if (poly_eval(p, r) == 0) {
                        roots.push_back(r);
                        p = deflate(p, r);
                        found = true;
                    }
                }
            }
            if (found) break;
        }
    }
    if (rest) {
        const Rational lead = p.back();
        for (auto& c : p) c /= lead;
        *rest = p;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string poly_to_string(const RPoly& p, const std::string& var)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        Rational c = p[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        if (i == 0 || c != 1) os << to_string(c) << (i ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace smf
