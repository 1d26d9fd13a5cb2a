#pragma once

// Dense exact linear algebra over Q and rational univariate polynomials.

#include <cstddef>
#include <string>
#include <vector>

#include "smf/rational.hpp"

namespace smf {

using RVec = std::vector<Rational>;

class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
    static RMatrix identity(std::size_t n);
    static RMatrix from_rows(const std::vector<RVec>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    RVec row(std::size_t i) const;

    RMatrix operator*(const RMatrix& o) const;
    RMatrix operator+(const RMatrix& o) const;
    RMatrix operator-(const RMatrix& o) const;
    RMatrix operator*(const Rational& s) const;
    RMatrix transpose() const;
    friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
    std::size_t r_ = 0, c_ = 0;
    RVec d_;
};

std::string to_string(const RMatrix& m);

std::size_t rank(RMatrix m);
// Throws Singular.
RMatrix inverse(const RMatrix& m);
Rational determinant(RMatrix m);
// Basis of {x : m x = 0}.
std::vector<RVec> nullspace(const RMatrix& m);
// Some x with m x = b; throws Inconsistent.
RVec solve(const RMatrix& m, const RVec& b);

// Polynomials as coefficient vectors, lowest degree first.
using RPoly = std::vector<Rational>;
RPoly charpoly(const RMatrix& m);  // det(x I - m), monic
Rational poly_eval(const RPoly& p, const Rational& x);
// Divide by (x - r); r must be a root.
RPoly deflate(const RPoly& p, const Rational& r);
// Rational roots with multiplicity, and the leftover factor without rational roots.
std::vector<Rational> rational_roots(const RPoly& p, RPoly* rest = nullptr);
std::string poly_to_string(const RPoly& p, const std::string& var = "x");

}  // namespace smf
