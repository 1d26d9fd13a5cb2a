#include "smf/quadform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "smf/errors.hpp"

namespace smf {

namespace {

std::int64_t narrow(__int128 v, const char* what)
{
    if (v > INT64_MAX || v < INT64_MIN) fail("Overflow", what);
    return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t n, std::int64_t d)
{
    std::int64_t q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

}  // namespace

std::string to_string(const BinQF& f)
{
    std::ostringstream os;
    os << '[' << f.a << ',' << f.b << ',' << f.c << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BinQF& f) { return os << to_string(f); }

std::string to_string(const UnimodMat& A)
{
    std::ostringstream os;
    os << "[[" << A.p << ',' << A.q << "],[" << A.r << ',' << A.s << "]]";
    return os.str();
}

std::int64_t disc(const BinQF& f)
{
    const __int128 d = static_cast<__int128>(f.b) * f.b - static_cast<__int128>(4) * f.a * f.c;
    return narrow(d, "discriminant");
}

bool is_psd(const BinQF& f)
{
    if (f.a < 0 || f.c < 0) return false;
    return static_cast<__int128>(f.b) * f.b <= static_cast<__int128>(4) * f.a * f.c;
}

std::int64_t content(const BinQF& f)
{
    return std::gcd(std::gcd(f.a, f.b), f.c);
}

bool is_reduced(const BinQF& f)
{
    if (f.a == 0) return f.b == 0 && f.c >= 0;
    return 0 <= f.b && f.b <= f.a && f.a <= f.c;
}

BinQF act(const UnimodMat& A, const BinQF& f)
{
    using W = __int128;
    const W p = A.p, q = A.q, r = A.r, s = A.s;
    const W a = f.a, b = f.b, c = f.c;
    return {narrow(p * p * a + p * q * b + q * q * c, "act"),
            narrow(2 * p * r * a + (p * s + q * r) * b + 2 * q * s * c, "act"),
            narrow(r * r * a + r * s * b + s * s * c, "act")};
}

Reduction reduce(const BinQF& f)
{
    if (!is_psd(f)) fail("NotPositiveSemidefinite", to_string(f));
    BinQF h = f;
    UnimodMat M = UnimodMat::identity();
    const UnimodMat W{0, 1, 1, 0};
    for (;;) {
        if (h.a == 0) break;  // psd forces b = 0
        if (h.b < 0) {
            h.b = -h.b;
            M = M * UnimodMat::E();
        }
        const std::int64_t n = floor_div(h.a - h.b, 2 * h.a);
        if (n != 0) {
            const UnimodMat L{1, 0, n, 1};
            h = act(L, h);
            M = M * UnimodMat{1, 0, -n, 1};
        }
        if (h.a > h.c) {
            h = {h.c, h.b, h.a};
            M = M * W;
            continue;
        }
        if (h.b < 0) {
            h.b = -h.b;
            M = M * UnimodMat::E();
        }
        break;
    }
    return {h, M};
}

bool within_precision(const BinQF& f, std::int64_t X)
{
    if (!is_psd(f)) return false;
    const std::int64_t d = disc(f);
    if (d < 0) return -d <= X;
    return content(f) <= singular_bound(X);
}

std::vector<BinQF> reduced_forms_below(std::int64_t X)
{
    std::vector<BinQF> out;
    for (std::int64_t c = 0; c <= singular_bound(X); ++c) out.push_back({0, 0, c});
    for (std::int64_t a = 1; 3 * a * a <= X; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) {
            for (std::int64_t c = a; 4 * a * c - b * b <= X; ++c) out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const BinQF& x, const BinQF& y) {
        const std::int64_t dx = -disc(x), dy = -disc(y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    return out;
}

PrecisionIndex::PrecisionIndex(std::int64_t X) : X_(X), forms_(reduced_forms_below(X))
{
    pos_.reserve(forms_.size() * 2);
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        pos_.emplace(forms_[i], i);
        max_a_ = std::max(max_a_, forms_[i].a);
        max_c_ = std::max(max_c_, forms_[i].c);
    }
}

std::shared_ptr<const PrecisionIndex> PrecisionIndex::get(std::int64_t X)
{
    static std::mutex mu;
    static std::map<std::int64_t, std::shared_ptr<const PrecisionIndex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(X);
    if (it != cache.end()) return it->second;
    auto idx = std::make_shared<const PrecisionIndex>(X);
    cache.emplace(X, idx);
    return idx;
}

std::ptrdiff_t PrecisionIndex::position(const BinQF& f) const
{
    auto it = pos_.find(f);
    return it == pos_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::vector<std::pair<BinQF, BinQF>> summand_pairs(const BinQF& f)
{
    if (!is_psd(f)) fail("NotPositiveSemidefinite", to_string(f));
    std::vector<std::pair<BinQF, BinQF>> out;
    for_each_summand(f, [&](const BinQF& f1, const BinQF& f2) { out.emplace_back(f1, f2); });
    return out;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (static_cast<__int128>(r) * r > n) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace smf
