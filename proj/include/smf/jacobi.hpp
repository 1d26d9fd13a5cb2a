#pragma once

// Index-1 Jacobi forms stored by (D, r mod 2) with D = 4n - r^2, and the
// explicit map (f, g) -> (k/2) f A - (q d/dq f) B + g B.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "smf/qseries.hpp"

namespace smf {

// Finite Laurent data: row n holds the coefficients of q^n zeta^r for |r| <= R(n).
class LaurentQZ {
public:
    explicit LaurentQZ(std::int64_t nmax);

    std::int64_t nmax() const { return nmax_; }
    static std::int64_t rbound(std::int64_t n) { return isqrt_bound(4 * n + 1); }
    Rational get(std::int64_t n, std::int64_t r) const;
    void add(std::int64_t n, std::int64_t r, const Rational& v);
    // (h * this)(n, r) = sum_m h_m this(n - m, r)
    LaurentQZ times(const QSeries& h) const;
    LaurentQZ operator+(const LaurentQZ& o) const;
    LaurentQZ operator*(const Rational& s) const;
    bool operator==(const LaurentQZ& o) const { return rows_ == o.rows_; }

private:
    static std::int64_t isqrt_bound(std::int64_t m);

    std::int64_t nmax_;
    std::vector<std::vector<Rational>> rows_;  // rows_[n][r + R(n)]
};

// A and B through q^nmax.
LaurentQZ jacobi_A(std::int64_t nmax);
LaurentQZ jacobi_B(std::int64_t nmax);
// The defining double sums taken literally, for cross-checking.
LaurentQZ jacobi_A_direct(std::int64_t nmax);
LaurentQZ jacobi_B_direct(std::int64_t nmax);

class JacobiIdx1 {
public:
    JacobiIdx1(long k, std::int64_t Dmax) : k_(k), Dmax_(Dmax) {}

    long weight() const { return k_; }
    // Largest discriminant 4n - r^2 stored.
    std::int64_t max_disc() const { return Dmax_; }
    std::int64_t nmax() const { return (Dmax_ + 1) / 4; }
    Rational d(std::int64_t n, std::int64_t r) const;
    Rational by_disc(std::int64_t D, int rho) const;
    void set(std::int64_t D, int rho, const Rational& v);
    const std::map<std::pair<std::int64_t, int>, Rational>& entries() const { return m_; }

private:
    long k_;
    std::int64_t Dmax_;
    std::map<std::pair<std::int64_t, int>, Rational> m_;
};

// Recollect Laurent data into (D, rho) storage. Throws InconsistentIndexLaw on
// a conflict or on a nonzero coefficient with 4n - r^2 < 0.
JacobiIdx1 recollect(const LaurentQZ& L, long k);

// f of weight k and g a cusp form of weight k + 2, both with offset 0 and at
// least nmax + 1 terms.
JacobiIdx1 skoruppa_I(const QSeries& f, const QSeries& g, long k, std::int64_t nmax);
LaurentQZ skoruppa_I_laurent(const QSeries& f, const QSeries& g, long k, std::int64_t nmax);

}  // namespace smf
