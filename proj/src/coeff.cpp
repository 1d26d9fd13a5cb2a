#include "smf/coeff.hpp"

#include <memory>
#include <sstream>

#include "smf/errors.hpp"

namespace smf {

std::string to_string(Character x)
{
    switch (x) {
    case Character::One: return "1";
    case Character::Det: return "det";
    case Character::Sigma: return "sigma";
    case Character::DetSigma: return "det.sigma";
    }
    return "?";
}

Character parse_character(std::string_view s)
{
    if (s == "1") return Character::One;
    if (s == "det") return Character::Det;
    if (s == "sigma") return Character::Sigma;
    if (s == "det.sigma") return Character::DetSigma;
    fail("ParseError", "unknown character '" + std::string(s) + "'");
}

int sigma_char(const UnimodMat& A)
{
    auto m2 = [](std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); };
    const int p = m2(A.p), q = m2(A.q), r = m2(A.r), s = m2(A.s);
    // (1,0) -> 0, (0,1) -> 1, (1,1) -> 2
    auto code = [](int x, int y) { return x == 1 && y == 0 ? 0 : (x == 0 && y == 1 ? 1 : 2); };
    const int img[3] = {code(p, r), code(q, s), code((p + q) % 2, (r + s) % 2)};
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += (img[i] == i);
    return fixed == 1 ? -1 : 1;
}

int char_eval(Character x, const UnimodMat& A)
{
    int v = 1;
    const auto i = char_index(x);
    if (i & 1) v *= static_cast<int>(A.det());
    if (i & 2) v *= sigma_char(A);
    return v;
}

HomPoly::HomPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty()) c_.resize(1);
}

bool HomPoly::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

HomPoly HomPoly::operator+(const HomPoly& o) const
{
    if (degree() != o.degree()) fail("ModuleMismatch", "polynomial degrees differ");
    HomPoly r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const
{
    if (degree() != o.degree()) fail("ModuleMismatch", "polynomial degrees differ");
    HomPoly r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const
{
    HomPoly r(degree() + o.degree());
    for (int i = 0; i <= degree(); ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int k = 0; k <= o.degree(); ++k) r[i + k] += (*this)[i] * o[k];
    }
    return r;
}

HomPoly HomPoly::operator*(const Rational& s) const
{
    HomPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::string to_string(const HomPoly& p)
{
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ' ';
        out += to_string(p[i]);
    }
    return out;
}

SymPower::SymPower(const UnimodMat& A, int j) : j_(j), identity_(A == UnimodMat::identity())
{
    const int n = j + 1;
    m_.assign(static_cast<std::size_t>(n * n), Integer(0));
    // powers of (pX + rY) and (qX + sY) as coefficient lists indexed by Y-degree
    std::vector<std::vector<Integer>> u(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    u[0] = {Integer(1)};
    w[0] = {Integer(1)};
    for (int e = 1; e < n; ++e) {
        auto step = [e](const std::vector<Integer>& prev, std::int64_t x, std::int64_t y) {
            std::vector<Integer> cur(static_cast<std::size_t>(e) + 1, Integer(0));
            for (int t = 0; t < e; ++t) {
                cur[static_cast<std::size_t>(t)] += prev[static_cast<std::size_t>(t)] * Integer(x);
                cur[static_cast<std::size_t>(t) + 1] += prev[static_cast<std::size_t>(t)] * Integer(y);
            }
            return cur;
        };
        u[static_cast<std::size_t>(e)] = step(u[static_cast<std::size_t>(e) - 1], A.p, A.r);
        w[static_cast<std::size_t>(e)] = step(w[static_cast<std::size_t>(e) - 1], A.q, A.s);
    }
    for (int i = 0; i < n; ++i) {
        const auto& left = u[static_cast<std::size_t>(j - i)];
        const auto& right = w[static_cast<std::size_t>(i)];
        for (std::size_t x = 0; x < left.size(); ++x)
            for (std::size_t y = 0; y < right.size(); ++y)
                m_[static_cast<std::size_t>(i * n) + x + y] += left[x] * right[y];
    }
}

void SymPower::apply(const Rational* in, Rational* out) const
{
    const int n = j_ + 1;
    for (int m = 0; m < n; ++m) out[m] = 0;
    for (int i = 0; i < n; ++i) {
        if (in[i] == 0) continue;
        for (int m = 0; m < n; ++m) {
            const Integer& e = at(i, m);
            if (e != 0) out[m] += in[i] * e;
        }
    }
}

HomPoly act_poly(const UnimodMat& A, const HomPoly& p)
{
    SymPower sp(A, p.degree());
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 1);
    sp.apply(p.coeffs().data(), out.data());
    return HomPoly(std::move(out));
}

std::string to_string(const Module& m)
{
    std::string s = m.group_ring ? "groupring" : (m.j == 0 ? "rational" : "poly");
    if (m.j != 0) s += (m.group_ring ? " poly " : " ") + std::to_string(m.j);
    return s;
}

Module product_module(const Module& x, const Module& y)
{
    if (x.group_ring != y.group_ring)
        fail("ModuleMismatch", to_string(x) + " vs " + to_string(y));
    return {x.j + y.j, x.group_ring};
}

CoeffValue CoeffValue::scalar(const Rational& x)
{
    CoeffValue r;
    r.v[0] = x;
    return r;
}

CoeffValue CoeffValue::poly(const HomPoly& p)
{
    CoeffValue r(Module::poly(p.degree()));
    r.v = p.coeffs();
    return r;
}

bool CoeffValue::is_zero() const
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

HomPoly CoeffValue::component(Character x) const
{
    const int n = mod.j + 1;
    const int part = mod.group_ring ? char_index(x) : 0;
    if (!mod.group_ring && x != Character::One) return HomPoly(mod.j);
    return HomPoly(std::vector<Rational>(v.begin() + part * n, v.begin() + (part + 1) * n));
}

CoeffValue CoeffValue::operator+(const CoeffValue& o) const
{
    if (!(mod == o.mod)) fail("ModuleMismatch", to_string(mod) + " vs " + to_string(o.mod));
    CoeffValue r(*this);
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
}

CoeffValue CoeffValue::operator-(const CoeffValue& o) const
{
    if (!(mod == o.mod)) fail("ModuleMismatch", to_string(mod) + " vs " + to_string(o.mod));
    CoeffValue r(*this);
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
    return r;
}

CoeffValue CoeffValue::operator*(const Rational& s) const
{
    CoeffValue r(*this);
    for (auto& x : r.v) x *= s;
    return r;
}

void mul_accumulate(const Module& mx, const Rational* x, const Module& my, const Rational* y,
                    Rational* out)
{
    const int nx = mx.j + 1, ny = my.j + 1, nz = mx.j + my.j + 1;
    if (!mx.group_ring) {
        for (int i = 0; i < nx; ++i) {
            if (x[i] == 0) continue;
            for (int k = 0; k < ny; ++k)
                if (y[k] != 0) out[i + k] += x[i] * y[k];
        }
        return;
    }
    for (int cx = 0; cx < 4; ++cx) {
        for (int cy = 0; cy < 4; ++cy) {
            const Rational* px = x + cx * nx;
            const Rational* py = y + cy * ny;
            Rational* pz = out + (cx ^ cy) * nz;
            for (int i = 0; i < nx; ++i) {
                if (px[i] == 0) continue;
                for (int k = 0; k < ny; ++k)
                    if (py[k] != 0) pz[i + k] += px[i] * py[k];
            }
        }
    }
}

CoeffValue operator*(const CoeffValue& x, const CoeffValue& y)
{
    CoeffValue r(product_module(x.mod, y.mod));
    mul_accumulate(x.mod, x.v.data(), y.mod, y.v.data(), r.v.data());
    return r;
}

std::string to_string(const CoeffValue& x)
{
    std::string out;
    const int n = x.mod.j + 1;
    for (int part = 0; part < x.mod.parts(); ++part) {
        if (part) out += " |";
        for (int i = 0; i < n; ++i) {
            if (part || i) out += ' ';
            out += to_string(x.v[static_cast<std::size_t>(part * n + i)]);
        }
    }
    return out;
}

void act_value(const UnimodMat& A, Character chi, const Module& m, Rational* data)
{
    const int n = m.j + 1;
    std::vector<Rational> tmp;
    std::unique_ptr<SymPower> sp;
    if (m.j > 0 && !(A == UnimodMat::identity())) {
        sp = std::make_unique<SymPower>(A, m.j);
        tmp.resize(static_cast<std::size_t>(n));
    }
    for (int part = 0; part < m.parts(); ++part) {
        Rational* p = data + part * n;
        const int sign = char_eval(m.group_ring ? char_from_index(part) : chi, A);
        if (sp) {
            sp->apply(p, tmp.data());
            for (int i = 0; i < n; ++i) p[i] = tmp[static_cast<std::size_t>(i)];
        }
        if (sign < 0)
            for (int i = 0; i < n; ++i) p[i] = -p[i];
    }
}

CoeffValue act_value(const UnimodMat& A, Character chi, const CoeffValue& x)
{
    CoeffValue r(x);
    act_value(A, chi, r.mod, r.v.data());
    return r;
}

}  // namespace smf
