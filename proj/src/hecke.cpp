#include "smf/hecke.hpp"

#include "smf/arith.hpp"
#include "smf/errors.hpp"

namespace smf {

namespace {

std::int64_t ipow(std::int64_t p, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, p, &r)) fail("Overflow", "prime power");
    }
    return r;
}

std::int64_t mod(std::int64_t x, std::int64_t m)
{
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

Rational rpow(std::int64_t p, long e)
{
    Integer m = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) m *= p;
    return e < 0 ? Rational(1) / Rational(m) : Rational(m);
}

void check_prime(std::int64_t p)
{
    if (!is_prime(p)) fail("NotPrime", std::to_string(p));
}

}  // namespace

std::vector<UnimodMat> coset_reps(std::int64_t p, int beta)
{
    check_prime(p);
    if (beta < 0) fail("DomainError", "negative exponent");
    if (beta == 0) return {UnimodMat::identity()};
    const std::int64_t q = ipow(p, beta);
    std::vector<UnimodMat> out;
    for (std::int64_t j = 0; j < q; ++j) out.push_back({1, 0, j, 1});
    for (std::int64_t j = 0; j < q / p; ++j) out.push_back(UnimodMat::S() * UnimodMat{1, 0, p * j, 1});
    return out;
}

bool same_coset(const UnimodMat& U1, const UnimodMat& U2, std::int64_t p, int beta)
{
    const UnimodMat g = U1.inverse() * U2;
    return mod(g.r, ipow(p, beta)) == 0;
}

FormalSMF hecke_T(const FormalSMF& F, std::int64_t p, int delta)
{
    return hecke_T(F, p, delta, [p](int beta) { return coset_reps(p, beta); });
}

FormalSMF hecke_T(const FormalSMF& F, std::int64_t p, int delta, const CosetRepsFn& reps)
{
    check_prime(p);
    if (delta < 1) fail("DomainError", "delta must be positive");
    const Weight& w = F.weight();
    if (!w.known) fail("UnknownWeight", "hecke_T needs weight metadata");
    if (w.k.get_den() != 1) fail("DomainError", "hecke_T needs an integral weight");
    const long k = w.k.get_num().get_si();
    const int j = w.j;
    const std::int64_t pd2 = ipow(p, 2 * delta);
    const std::int64_t Xo = F.precision() / pd2;
    if (Xo < 1) fail("InsufficientPrecision", "output precision " + std::to_string(Xo));

    struct Term {
        std::int64_t pa, pbg, pg, pb;  // p^alpha, p^(beta+gamma), p^gamma, p^beta
        Rational weight;
        std::vector<UnimodMat> U;
        std::vector<SymPower> act;
    };
    std::vector<Term> terms;
    for (int alpha = 0; alpha <= delta; ++alpha)
        for (int beta = 0; alpha + beta <= delta; ++beta) {
            const int gamma = delta - alpha - beta;
            Term t{ipow(p, alpha), ipow(p, beta + gamma), ipow(p, gamma), ipow(p, beta),
                   rpow(p, static_cast<long>(beta) * (k + j - 2) + static_cast<long>(gamma) * (2 * k + j - 3)), reps(beta), {}};
            // (U d_{0,beta})^-t = p^-beta U^-t diag(p^beta, 1); the p^-beta goes into the weight
            t.weight /= rpow(p, static_cast<long>(beta) * j);
            for (const auto& U : t.U) {
                const UnimodMat V = U.inverse().transpose();
                t.act.emplace_back(UnimodMat{V.p * t.pb, V.q, V.r * t.pb, V.s}, j);
            }
            terms.push_back(std::move(t));
        }

    FormalSMF out(Xo, F.character(), F.module(), w);
    const std::size_t W = F.width();
    const int parts = F.module().parts();
    std::vector<Rational> val(W), tmp(static_cast<std::size_t>(j) + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const BinQF f = out.key(i);
        Rational* dst = out.data(i);
        for (const auto& t : terms) {
            for (std::size_t u = 0; u < t.U.size(); ++u) {
                const BinQF fu = act(t.U[u].transpose(), f);
                if (mod(fu.a, t.pbg) != 0 || mod(fu.b, t.pg) != 0 || mod(fu.c, t.pg) != 0) continue;
                // c_U / p^(gamma - beta) = c_U p^beta / p^gamma
                const BinQF g{t.pa * (fu.a / t.pbg), t.pa * (fu.b / t.pg), t.pa * (fu.c / t.pg) * t.pb};
                F.coefficient_into(g, val.data());
                for (int part = 0; part < parts; ++part) {
                    Rational* v = val.data() + static_cast<std::size_t>(part * (j + 1));
                    if (j > 0) {
                        t.act[u].apply(v, tmp.data());
                        std::copy(tmp.begin(), tmp.end(), v);
                    }
                }
                for (std::size_t r = 0; r < W; ++r)
                    if (val[r] != 0) dst[r] += t.weight * val[r];
            }
        }
    }
    return out;
}

FormalSMF hecke_U(const FormalSMF& F, std::int64_t p) { return scale_index(F, p); }

RMatrix hecke_matrix(const std::vector<FormalSMF>& basis, std::int64_t p)
{
    if (basis.empty()) fail("DomainError", "empty basis");
    const std::size_t n = basis.size();
    for (const auto& F : basis) {
        if (!(F.weight() == basis[0].weight())) fail("WeightMismatch", "basis weights differ");
        if (F.character() != basis[0].character()) fail("CharacterMismatch", "basis characters differ");
        if (!(F.module() == basis[0].module())) fail("ModuleMismatch", "basis modules differ");
    }
    std::vector<FormalSMF> images;
    std::int64_t Xo = -1;
    for (const auto& F : basis) {
        images.push_back(hecke_T(F, p, 1));
        Xo = Xo < 0 ? images.back().precision() : std::min(Xo, images.back().precision());
    }
    const std::size_t W = basis[0].width();
    const PrecisionIndex& idx = *PrecisionIndex::get(Xo);

    // greedy pivots (key, component) in index order
    std::vector<std::pair<BinQF, std::size_t>> piv;
    RMatrix rows(0, n);
    std::vector<RVec> cols;
    std::size_t rk = 0;
    for (const BinQF& f : idx.forms()) {
        if (rk == n) break;
        std::vector<CoeffValue> vals;
        for (const auto& F : basis) vals.push_back(F.at(f));
        for (std::size_t r = 0; r < W && rk < n; ++r) {
            RVec col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = vals[i].v[r];
            cols.push_back(col);
            RMatrix N(n, cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t i = 0; i < n; ++i) N(i, c) = cols[c][i];
            if (rank(N) > rk) {
                ++rk;
                piv.emplace_back(f, r);
            } else {
                cols.pop_back();
            }
        }
    }
    if (rk < n) fail("RankDeficient", "basis has rank " + std::to_string(rk) + " < " + std::to_string(n) + " at precision " + std::to_string(Xo));
    RMatrix N(n, n), M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) {
            N(i, c) = basis[i].at(piv[c].first).v[piv[c].second];
            M(i, c) = images[i].at(piv[c].first).v[piv[c].second];
        }
    return M * inverse(N);
}

EigenData eigen_decompose(const RMatrix& H)
{
    EigenData e;
    e.charpoly = charpoly(H);
    RPoly rest;
    auto roots = rational_roots(e.charpoly, &rest);
    if (rest.size() > 1) e.irrational = rest;
    const std::size_t n = H.rows();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i > 0 && roots[i] == roots[i - 1]) continue;
        EigenData::Pair pr;
        pr.value = roots[i];
        // left eigenvectors: v H = lambda v
        pr.vectors = nullspace((H - RMatrix::identity(n) * roots[i]).transpose());
        e.rational.push_back(std::move(pr));
    }
    return e;
}

EigenData eigenforms(const std::vector<FormalSMF>& basis, std::int64_t p)
{
    return eigen_decompose(hecke_matrix(basis, p));
}

}  // namespace smf
