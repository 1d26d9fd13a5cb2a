#pragma once

// Truncated q-series with a global rational exponent offset.

#include <cstddef>
#include <string>
#include <vector>

#include "smf/rational.hpp"

namespace smf {

class QSeries {
public:
    QSeries() = default;
    QSeries(std::vector<Rational> coeffs, Rational offset = 0);
    static QSeries zero(std::size_t prec, Rational offset = 0);
    static QSeries constant(const Rational& c, std::size_t prec);

    const Rational& offset() const { return off_; }
    std::size_t precision() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of q^(offset + n).
    const Rational& operator[](std::size_t n) const { return c_[n]; }
    Rational& operator[](std::size_t n) { return c_[n]; }

    QSeries truncated(std::size_t prec) const;
    // Same series re-expressed with offset 0; the offset must be a nonnegative integer.
    QSeries with_zero_offset() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Rational& s) const;
    // q d/dq
    QSeries derivative() const;
    QSeries inverse() const;
    QSeries pow(long e) const;
    bool operator==(const QSeries& o) const { return off_ == o.off_ && c_ == o.c_; }
    bool is_zero() const;

private:
    void check_offsets(const QSeries& o) const;

    std::vector<Rational> c_;
    Rational off_ = 0;
};

std::string to_string(const QSeries& s, std::size_t terms = 8);

QSeries eta_pow(long m, std::size_t prec);
QSeries eisenstein1(int k, std::size_t prec);
QSeries delta(std::size_t prec);
// Monomials E4^a E6^b with 4a + 6b = k, a descending.
std::vector<QSeries> mf_basis1(int k, std::size_t prec);

}  // namespace smf
