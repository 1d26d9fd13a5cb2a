#include "smf/qseries.hpp"

#include <algorithm>

#include "smf/arith.hpp"
#include "smf/errors.hpp"

namespace smf {

QSeries::QSeries(std::vector<Rational> coeffs, Rational offset) : c_(std::move(coeffs)), off_(std::move(offset)) {}

QSeries QSeries::zero(std::size_t prec, Rational offset) { return QSeries(std::vector<Rational>(prec), std::move(offset)); }

QSeries QSeries::constant(const Rational& c, std::size_t prec)
{
    QSeries s = zero(prec);
    if (prec) s.c_[0] = c;
    return s;
}

QSeries QSeries::truncated(std::size_t prec) const
{
    QSeries s(*this);
    if (s.c_.size() > prec) s.c_.resize(prec);
    return s;
}

void QSeries::check_offsets(const QSeries& o) const
{
    if (off_ != o.off_) fail("OffsetMismatch", to_string(off_) + " vs " + to_string(o.off_));
}

QSeries QSeries::with_zero_offset() const
{
    if (!is_integer(off_) || off_ < 0) fail("OffsetMismatch", "offset " + to_string(off_) + " is not a nonnegative integer");
    const auto shift = static_cast<std::size_t>(off_.get_num().get_ui());
    std::vector<Rational> c(shift);
    c.insert(c.end(), c_.begin(), c_.end());
    return QSeries(std::move(c));
}

QSeries QSeries::operator+(const QSeries& o) const
{
    check_offsets(o);
    QSeries s = zero(std::min(precision(), o.precision()), off_);
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = c_[i] + o.c_[i];
    return s;
}

QSeries QSeries::operator-(const QSeries& o) const
{
    check_offsets(o);
    QSeries s = zero(std::min(precision(), o.precision()), off_);
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = c_[i] - o.c_[i];
    return s;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    const std::size_t n = std::min(precision(), o.precision());
    QSeries s = zero(n, off_ + o.off_);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t k = 0; i + k < n; ++k)
            if (o.c_[k] != 0) s.c_[i + k] += c_[i] * o.c_[k];
    }
    return s;
}

QSeries QSeries::operator*(const Rational& x) const
{
    QSeries s(*this);
    for (auto& v : s.c_) v *= x;
    return s;
}

QSeries QSeries::derivative() const
{
    QSeries s(*this);
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] *= off_ + Rational(static_cast<long>(i));
    return s;
}

QSeries QSeries::inverse() const
{
    if (c_.empty() || c_[0] == 0) fail("DivisionByZero", "series with zero leading term");
    const std::size_t n = precision();
    QSeries s = zero(n, -off_);
    const Rational inv0 = 1 / c_[0];
    s.c_[0] = inv0;
    for (std::size_t i = 1; i < n; ++i) {
        Rational t = 0;
        for (std::size_t k = 1; k <= i; ++k)
            if (c_[k] != 0) t += c_[k] * s.c_[i - k];
        s.c_[i] = -t * inv0;
    }
    return s;
}

QSeries QSeries::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    QSeries result = constant(1, precision());
    QSeries base(*this);
    for (long t = e; t > 0; t >>= 1) {
        if (t & 1) result = result * base;
        if (t > 1) base = base * base;
    }
    return result;
}

bool QSeries::is_zero() const
{
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

std::string to_string(const QSeries& s, std::size_t terms)
{
    std::string out;
    std::size_t shown = 0;
    for (std::size_t i = 0; i < s.precision() && shown < terms; ++i) {
        if (s[i] == 0) continue;
        const Rational e = s.offset() + Rational(static_cast<long>(i));
        std::string c = to_string(s[i]);
        if (!out.empty()) {
            if (c[0] == '-') {
                out += " - ";
                c.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        if (e == 0) out += c;
        else {
            if (c == "1") c.clear();
            else if (c == "-1") c = "-";
            out += c + "q";
            if (e != 1) out += "^" + to_string(e);
        }
        ++shown;
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + to_string(s.offset() + Rational(static_cast<long>(s.precision()))) + ")";
}

QSeries eta_pow(long m, std::size_t prec)
{
    // prod (1 - q^n) by the pentagonal number theorem
    QSeries p = QSeries::zero(prec);
    for (long k = 0;; ++k) {
        bool any = false;
        for (long sgnk : {1L, -1L}) {
            if (k == 0 && sgnk < 0) continue;
            const long kk = sgnk * k;
            const long e = kk * (3 * kk - 1) / 2;
            if (e < static_cast<long>(prec)) {
                p[static_cast<std::size_t>(e)] += (k % 2) ? -1 : 1;
                any = true;
            }
        }
        if (!any) break;
    }
    QSeries r = p.pow(m);
    return QSeries(r.coeffs(), make_rational(m, 24));
}

QSeries eisenstein1(int k, std::size_t prec)
{
    if (k < 4 || k % 2) fail("BadWeight", std::to_string(k));
    QSeries s = QSeries::constant(1, prec);
    const Rational f = Rational(-2 * k) / bernoulli(k);
    for (std::size_t n = 1; n < prec; ++n) s[n] = f * Rational(sigma(k - 1, static_cast<std::int64_t>(n)));
    return s;
}

QSeries delta(std::size_t prec)
{
    const QSeries e4 = eisenstein1(4, prec), e6 = eisenstein1(6, prec);
    return (e4 * e4 * e4 - e6 * e6) * Rational(1, 1728);
}

std::vector<QSeries> mf_basis1(int k, std::size_t prec)
{
    std::vector<QSeries> out;
    if (k < 0 || k % 2) return out;
    const QSeries e4 = eisenstein1(4, prec), e6 = eisenstein1(6, prec);
    for (int a = k / 4; a >= 0; --a) {
        const int rest = k - 4 * a;
        if (rest % 6) continue;
        out.push_back(e4.pow(a) * e6.pow(rest / 6));
    }
    return out;
}

}  // namespace smf
