#include "smf/lifts.hpp"

#include <numeric>

#include "smf/arith.hpp"
#include "smf/errors.hpp"

namespace smf {

FormalSMF maass_lift(const JacobiIdx1& phi, long k, std::int64_t X)
{
    if (phi.max_disc() < X)
        fail("InsufficientJacobiPrecision",
             "Jacobi data up to discriminant " + std::to_string(phi.max_disc()) + ", need " + std::to_string(X));
    FormalSMF F(X, det_power(k), Module::scalar(), Weight::of(k));
    const Rational d00 = phi.by_disc(0, 0);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const BinQF f = F.key(i);
        Rational v = 0;
        if (f.a == 0) {
            if (f.c == 0) v = -bernoulli(static_cast<int>(k)) / Rational(2 * k) * d00;
            else v = Rational(sigma(k - 1, f.c)) * d00;
        } else {
            const std::int64_t D = 4 * f.a * f.c - f.b * f.b;
            for (auto delta : divisors(content(f))) {
                const Rational d = phi.by_disc(D / (delta * delta), static_cast<int>(((f.b / delta) % 2 + 2) % 2));
                if (d != 0) v += Rational(power(Integer(delta), static_cast<unsigned long>(k - 1))) * d;
            }
        }
        *F.data(i) = v;
    }
    return F;
}

FormalSMF eisenstein2(int k, std::int64_t X)
{
    if (k < 4 || k % 2) fail("BadWeight", std::to_string(k));
    FormalSMF F(X, Character::One, Module::scalar(), Weight::of(k));
    // normalized so that the singular part is the elliptic E_k
    const Rational lead = Rational(-2 * k) / bernoulli(k);
    const Rational z = cohen_H(k - 1, 0);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const BinQF f = F.key(i);
        if (f.a == 0 && f.c == 0) {
            *F.data(i) = 1;
            continue;
        }
        const std::int64_t N = 4 * f.a * f.c - f.b * f.b;
        Rational v = 0;
        for (auto d : divisors(content(f)))
            v += Rational(power(Integer(d), static_cast<unsigned long>(k - 1))) * cohen_H(k - 1, N / (d * d));
        *F.data(i) = lead * v / z;
    }
    return F;
}

}  // namespace smf
