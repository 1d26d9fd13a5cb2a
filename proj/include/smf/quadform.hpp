#pragma once

// Integral binary quadratic forms [a,b,c] = ax^2 + bxy + cy^2, the GL(2,Z)
// action M_{A.f} = A M_f A^t, and GL-reduction to 0 <= b <= a <= c.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace smf {

struct BinQF {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend auto operator<=>(const BinQF&, const BinQF&) = default;

    BinQF operator+(const BinQF& o) const { return {a + o.a, b + o.b, c + o.c}; }
    BinQF operator-(const BinQF& o) const { return {a - o.a, b - o.b, c - o.c}; }
    BinQF scaled(std::int64_t d) const { return {a * d, b * d, c * d}; }
};

struct BinQFHash {
    std::size_t operator()(const BinQF& f) const noexcept
    {
        std::uint64_t h = static_cast<std::uint64_t>(f.a) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(f.b) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(f.c) + 0x94D049BB133111EBull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::string to_string(const BinQF& f);
std::ostream& operator<<(std::ostream& os, const BinQF& f);

// A = [[p, q], [r, s]] in GL(2,Z).
struct UnimodMat {
    std::int64_t p = 1;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t s = 1;

    friend bool operator==(const UnimodMat&, const UnimodMat&) = default;

    std::int64_t det() const { return p * s - q * r; }
    UnimodMat operator*(const UnimodMat& o) const
    {
        return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
    }
    UnimodMat inverse() const
    {
        const std::int64_t d = det();  // +-1
        return {s * d, -q * d, -r * d, p * d};
    }
    UnimodMat transpose() const { return {p, r, q, s}; }

    static UnimodMat identity() { return {1, 0, 0, 1}; }
    static UnimodMat S() { return {0, -1, 1, 0}; }
    static UnimodMat T() { return {1, 1, 0, 1}; }
    static UnimodMat E() { return {1, 0, 0, -1}; }
};

std::string to_string(const UnimodMat& A);

// b^2 - 4ac; throws Overflow if it does not fit in 64 bits.
std::int64_t disc(const BinQF& f);
bool is_psd(const BinQF& f);
// gcd(a, b, c), with content([0,0,0]) = 0.
std::int64_t content(const BinQF& f);
bool is_reduced(const BinQF& f);

// (A.f)(x, y) = f((x, y) A), equivalently M_{A.f} = A M_f A^t.
BinQF act(const UnimodMat& A, const BinQF& f);

struct Reduction {
    BinQF form;           // reduced representative
    UnimodMat transform;  // act(transform, form) == input
};

// Throws NotPositiveSemidefinite for forms outside Q.
Reduction reduce(const BinQF& f);

// Largest c with [0,0,c] stored at discriminant precision X.
inline std::int64_t singular_bound(std::int64_t X) { return (X + 1) / 4; }

// True when f is psd and its orbit is stored at discriminant precision X.
bool within_precision(const BinQF& f, std::int64_t X);

// Reduced forms with 0 > disc >= -X together with [0,0,c], 0 <= c <= (X+1)/4,
// ordered by -disc, then a, b, c.
std::vector<BinQF> reduced_forms_below(std::int64_t X);

// Shared, cached key set for a discriminant precision.
class PrecisionIndex {
public:
    explicit PrecisionIndex(std::int64_t X);

    static std::shared_ptr<const PrecisionIndex> get(std::int64_t X);

    std::int64_t precision() const { return X_; }
    const std::vector<BinQF>& forms() const { return forms_; }
    std::size_t size() const { return forms_.size(); }
    // Position of a reduced form, or -1.
    std::ptrdiff_t position(const BinQF& f) const;
    std::int64_t max_a() const { return max_a_; }
    std::int64_t max_c() const { return max_c_; }

private:
    std::int64_t X_;
    std::vector<BinQF> forms_;
    std::unordered_map<BinQF, std::size_t, BinQFHash> pos_;
    std::int64_t max_a_ = 0;
    std::int64_t max_c_ = 0;
};

// Calls fn(f1, f2) for every ordered pair of psd forms with f1 + f2 == f.
template <class Fn>
void for_each_summand(const BinQF& f, Fn&& fn);

std::vector<std::pair<BinQF, BinQF>> summand_pairs(const BinQF& f);

std::int64_t isqrt(std::int64_t n);

// Range of b1 such that [a1,b1,c1] and [a-a1, b-b1, c-c1] are both psd.
inline std::pair<std::int64_t, std::int64_t> summand_b_range(const BinQF& f, std::int64_t a1,
                                                            std::int64_t c1)
{
    const std::int64_t r1 = isqrt(4 * a1 * c1);
    const std::int64_t r2 = isqrt(4 * (f.a - a1) * (f.c - c1));
    const std::int64_t lo = std::max(-r1, f.b - r2);
    const std::int64_t hi = std::min(r1, f.b + r2);
    return {lo, hi};
}

template <class Fn>
void for_each_summand(const BinQF& f, Fn&& fn)
{
    for (std::int64_t a1 = 0; a1 <= f.a; ++a1) {
        for (std::int64_t c1 = 0; c1 <= f.c; ++c1) {
            const auto [lo, hi] = summand_b_range(f, a1, c1);
            for (std::int64_t b1 = lo; b1 <= hi; ++b1) {
                const BinQF f1{a1, b1, c1};
                fn(f1, f - f1);
            }
        }
    }
}

}  // namespace smf
