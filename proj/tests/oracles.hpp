#pragma once

// Brute-force references shared by the unit tests and the acceptance run.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smf/fsmf.hpp"
#include "smf/quadform.hpp"
#include "smf/theta.hpp"

namespace smf::oracle {

// All v with q(v) <= t, by scanning the box |v_i| <= sqrt(2 t (G^-1)_ii).
inline std::vector<std::vector<std::int64_t>> box_vectors(const Lattice& L, std::int64_t t)
{
    const int n = L.rank();
    std::vector<double> m(static_cast<std::size_t>(n * 2 * n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i * 2 * n + j] = static_cast<double>(L.gram(i, j));
        m[i * 2 * n + n + i] = 1.0;
    }
    for (int c = 0; c < n; ++c) {
        const double p = m[c * 2 * n + c];
        for (int j = 0; j < 2 * n; ++j) m[c * 2 * n + j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = m[r * 2 * n + c];
            for (int j = 0; j < 2 * n; ++j) m[r * 2 * n + j] -= f * m[c * 2 * n + j];
        }
    }
    std::vector<std::int64_t> bound(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        bound[i] = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(t) * m[i * 2 * n + n + i])) + 1;
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = -bound[i];
    while (true) {
        if (L.q(v.data()) <= t) out.push_back(v);
        int i = 0;
        while (i < n && v[i] == bound[i]) {
            v[i] = -bound[i];
            ++i;
        }
        if (i == n) break;
        ++v[i];
    }
    return out;
}

// #{(v, w) : q(v) = a, (v, w) = b, q(w) = c}
inline std::int64_t theta_pairs(const Lattice& L, const BinQF& f)
{
    const auto V = box_vectors(L, std::max(f.a, f.c));
    std::int64_t n = 0;
    for (const auto& v : V) {
        if (L.q(v.data()) != f.a) continue;
        for (const auto& w : V)
            if (L.q(w.data()) == f.c && L.pairing(v.data(), w.data()) == f.b) ++n;
    }
    return n;
}

// Weighted count of SL(2,Z)-reduced forms of discriminant -N.
inline Rational hurwitz(std::int64_t N)
{
    Rational h = 0;
    for (std::int64_t a = 1; 3 * a * a <= N; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if ((b * b + N) % (4 * a)) continue;
            const std::int64_t c = (b * b + N) / (4 * a);
            if (c < a || (a == c && b < 0)) continue;
            if (a == b && b == c) h += make_rational(1, 3);
            else if (a == c && b == 0) h += make_rational(1, 2);
            else h += 1;
        }
    return h;
}

// Naive convolution at one index from two dense tables; throws when a summand is missing.
inline Rational convolve(const DenseTable& a, const DenseTable& b, const BinQF& f)
{
    Rational s = 0;
    for (std::int64_t a1 = 0; a1 <= f.a; ++a1)
        for (std::int64_t c1 = 0; c1 <= f.c; ++c1)
            for (std::int64_t b1 = -2 * (f.a + f.c); b1 <= 2 * (f.a + f.c); ++b1) {
                const BinQF f1{a1, b1, c1};
                const BinQF f2 = f - f1;
                if (!is_psd(f1) || !is_psd(f2)) continue;
                const Rational *x = a.get(f1), *y = b.get(f2);
                if (!x || !y) throw std::runtime_error("summand outside the dense tables");
                s += *x * *y;
            }
    return s;
}

}  // namespace smf::oracle
