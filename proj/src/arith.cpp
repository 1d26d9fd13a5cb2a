#include "smf/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>

#include "smf/errors.hpp"

namespace smf {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    n = std::llabs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> d{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t m = d.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t t = 0; t < m; ++t) d.push_back(d[t] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

int moebius(std::int64_t n)
{
    int m = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

Integer sigma(long k, std::int64_t n)
{
    Integer s = 0;
    for (auto d : divisors(n)) s += power(Integer(static_cast<long>(d)), static_cast<unsigned long>(k));
    return s;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

Integer binomial(long n, long k)
{
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

const Rational& bernoulli(int n)
{
    static std::mutex mu;
    static std::vector<Rational> B{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(B.size()) <= n) {
        const long m = static_cast<long>(B.size());
        Rational s = 0;
        for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * B[static_cast<std::size_t>(k)];
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        B.push_back(b);
    }
    return B[static_cast<std::size_t>(n)];
}

Rational bernoulli_poly(int m, const Rational& x)
{
    Rational s = 0;
    Rational xp = 1;
    // sum binom(m, i) B_i x^(m-i), accumulated from i = m down
    for (int i = m; i >= 0; --i) {
        s += Rational(binomial(m, i)) * bernoulli(i) * xp;
        xp *= x;
    }
    return s;
}

int kronecker(std::int64_t D, std::int64_t n)
{
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (D < 0) result = -result;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v > 0) {
        if (D % 2 == 0) return 0;
        const std::int64_t r8 = ((D % 8) + 8) % 8;
        if ((v % 2) && (r8 == 3 || r8 == 5)) result = -result;
    }
    // Jacobi symbol (D / n), n odd positive
    std::int64_t a = ((D % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_fundamental(std::int64_t D)
{
    if (D == 1) return true;
    if (D == 0) return false;
    const std::int64_t r4 = ((D % 4) + 4) % 4;
    auto squarefree = [](std::int64_t m) {
        for (auto [p, e] : factorize(m))
            if (e > 1) return false;
        return true;
    };
    if (r4 == 1) return squarefree(D);
    if (r4 != 0) return false;
    const std::int64_t m = D / 4;
    const std::int64_t r = ((m % 4) + 4) % 4;
    return (r == 2 || r == 3) && squarefree(m);
}

std::pair<std::int64_t, std::int64_t> fundamental_split(std::int64_t D)
{
    const std::int64_t r4 = ((D % 4) + 4) % 4;
    if (D == 0 || (r4 != 0 && r4 != 1)) fail("NotDiscriminant", std::to_string(D));
    std::int64_t s = D < 0 ? -1 : 1;
    std::int64_t f = 1;
    for (auto [p, e] : factorize(D)) {
        if (e % 2) s *= p;
        for (int i = 0; i < e / 2; ++i) f *= p;
    }
    if (((s % 4) + 4) % 4 == 1) return {s, f};
    return {4 * s, f / 2};
}

Rational dirichlet_L_neg(std::int64_t D0, int m)
{
    if (m < 1) fail("DomainError", "m must be positive");
    if (!is_fundamental(D0)) fail("NotFundamental", std::to_string(D0));
    const std::int64_t F = std::llabs(D0);
    Rational B = 0;
    for (std::int64_t a = 1; a <= F; ++a) {
        const int chi = kronecker(D0, a);
        if (chi == 0) continue;
        const Rational t = bernoulli_poly(m, make_rational(a, F));
        if (chi > 0) B += t;
        else B -= t;
    }
    B *= power(Rational(static_cast<long>(F)), m - 1);
    Rational r = -B / Rational(m);
    r.canonicalize();
    return r;
}

Rational zeta_neg(int m) { return dirichlet_L_neg(1, m); }

Rational cohen_H(int r, std::int64_t N)
{
    if (r < 1) fail("DomainError", "r must be positive");
    if (N < 0) fail("DomainError", "N must be nonnegative");
    if (N == 0) return zeta_neg(2 * r);
    const std::int64_t D = -N;
    const std::int64_t r4 = ((D % 4) + 4) % 4;
    if (r4 != 0 && r4 != 1) return 0;
    const auto [D0, f] = fundamental_split(D);
    Rational s = 0;
    for (auto d : divisors(f)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        const int chi = kronecker(D0, d);
        if (chi == 0) continue;
        Integer t = power(Integer(static_cast<long>(d)), static_cast<unsigned long>(r - 1)) * sigma(2 * r - 1, f / d);
        if (mu * chi > 0) s += t;
        else s -= t;
    }
    return dirichlet_L_neg(D0, r) * s;
}

}  // namespace smf
