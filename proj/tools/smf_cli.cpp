// smf: command-line front end for formal Siegel modular forms.
// Exit status: 0 success, 2 usage error, 3 domain error (name on stderr).

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "smf/brackets.hpp"
#include "smf/errors.hpp"
#include "smf/hecke.hpp"
#include "smf/lifts.hpp"
#include "smf/rings.hpp"
#include "smf/serialize.hpp"
#include "smf/theta.hpp"

using namespace smf;

namespace {

void emit(const FormalSMF& F, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << serialize(F);
    else
        save_fsmf(F, out);
}

int catalog_level(const std::string& tag)
{
    if (tag == "igusa" || tag == "level1") return 1;
    if (tag == "level2") return 2;
    if (tag == "level3") return 3;
    if (tag == "level4") return 4;
    fail("UnknownCatalog", "'" + tag + "' (expected igusa, level1, level2, level3, level4)");
}

void print_matrix(const RMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << to_string(m(i, j));
        std::cout << "]\n";
    }
}

std::string vec_string(const RVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

int selftest()
{
    int failed = 0;
    auto check = [&](const std::string& name, const std::function<bool()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string why;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            why = std::string(" (") + e.what() + ")";
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "ok   " : "FAIL ") << name << why << "  [" << s << " s]\n";
        if (!ok) ++failed;
    };
    std::mt19937_64 rng(20);
    check("theta(E8) = E4 at X=40", [] { return theta_series(lattice_e8(), 40) == eisenstein2(4, 40); });
    check("Phi(E4), Phi(E6) are the elliptic Eisenstein series", [] {
        const auto p4 = phi(eisenstein2(4, 40)), p6 = phi(eisenstein2(6, 40));
        return p4 == eisenstein1(4, p4.precision()) && p6 == eisenstein1(6, p6.precision());
    });
    for (int level = 1; level <= 4; ++level)
        check("level " + std::to_string(level) + " generators pass the audit at X=30", [&] {
            for (const auto& g : generators(level, 30))
                if (!audit_equivariance(g.form, rng).ok) return false;
            return true;
        });
    check("T(2) one = 15/8 one", [] {
        return hecke_T(FormalSMF::one(16), 2, 1) == scale(FormalSMF::one(4), make_rational(15, 8));
    });
    check("Satoh [E4,E6] at [0,0,1] is 144 Y^2", [] {
        const auto b = satoh_bracket(eisenstein2(4, 20), eisenstein2(6, 20));
        return b.at({0, 0, 1}) == CoeffValue::poly(HomPoly({Rational(0), Rational(0), Rational(144)}));
    });
    check("FSMF/1 round trip", [] {
        const auto F = generator(1, "chi35", 30);
        const std::string s = serialize(F);
        return serialize(deserialize(s)) == s;
    });
    std::cout << (failed ? std::to_string(failed) + " check(s) failed\n" : "all checks passed\n");
    if (failed) fail("SelftestFailed", std::to_string(failed) + " check(s) failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fourier expansions of degree-2 Siegel modular forms as formal Siegel modular forms"};
    app.require_subcommand(1);

    std::int64_t prec = 0, p = 2;
    int delta = 1, level = 1, weight = 0, terms = 10;
    std::string name, out, fileA, fileB, opname, gram;
    std::vector<std::int64_t> abc;

    auto* gen = app.add_subcommand("gen", "compute a catalog generator (igusa:E4, level2:K, ...)");
    gen->add_option("name", name, "<catalog>:<name>")->required();
    gen->add_option("--prec", prec, "discriminant precision")->required()->check(CLI::PositiveNumber);
    gen->add_option("--out", out, "output file (default stdout)");

    auto* red = app.add_subcommand("reduce", "reduce a psd binary quadratic form");
    red->add_option("abc", abc, "a b c")->required()->expected(3);

    auto* op = app.add_subcommand("op", "arithmetic on serialized forms");
    op->add_option("op", opname, "mul | add")->required()->check(CLI::IsMember({"mul", "add"}));
    op->add_option("A", fileA)->required();
    op->add_option("B", fileB)->required();
    op->add_option("--out", out, "output file (default stdout)");

    auto* hk = app.add_subcommand("hecke", "apply T(p^delta)");
    hk->add_option("F", fileA)->required();
    hk->add_option("--p", p)->required();
    hk->add_option("--delta", delta)->check(CLI::PositiveNumber);
    hk->add_option("--out", out, "output file (default stdout)");

    auto* uop = app.add_subcommand("uop", "apply U(p)");
    uop->add_option("F", fileA)->required();
    uop->add_option("--p", p)->required();
    uop->add_option("--out", out, "output file (default stdout)");

    auto* ph = app.add_subcommand("phi", "print the Siegel Phi image as a q-series");
    ph->add_option("F", fileA)->required();
    ph->add_option("--terms", terms, "number of terms shown")->check(CLI::PositiveNumber);

    auto* eig = app.add_subcommand("eigen", "Hecke matrix and eigenforms on a level-1 basis");
    eig->add_option("--level", level)->check(CLI::IsMember({1}));
    eig->add_option("--weight", weight)->required()->check(CLI::NonNegativeNumber);
    eig->add_option("--p", p)->required();
    eig->add_option("--prec", prec)->required()->check(CLI::PositiveNumber);

    auto* bas = app.add_subcommand("basis", "level-1 monomial basis and rank report");
    bas->add_option("--level", level)->check(CLI::IsMember({1}));
    bas->add_option("--weight", weight)->required()->check(CLI::NonNegativeNumber);
    bas->add_option("--prec", prec)->required()->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("express", "coordinates of a form in the level-1 basis");
    exp->add_option("F", fileA)->required();
    exp->add_option("--level", level)->check(CLI::IsMember({1}));
    exp->add_option("--weight", weight)->required()->check(CLI::NonNegativeNumber);

    auto* th = app.add_subcommand("theta", "theta series of a lattice (file: rank, then Gram entries)");
    th->add_option("--gram", gram)->required();
    th->add_option("--prec", prec)->required()->check(CLI::PositiveNumber);
    th->add_option("--out", out, "output file (default stdout)");

    auto* st = app.add_subcommand("selftest", "run the built-in consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            const auto colon = name.find(':');
            if (colon == std::string::npos) {
                std::cerr << "gen: expected <catalog>:<name>\n";
                return 2;
            }
            emit(generator(catalog_level(name.substr(0, colon)), name.substr(colon + 1), prec), out);
        } else if (*red) {
            const auto r = reduce({abc[0], abc[1], abc[2]});
            std::cout << to_string(r.form) << "\n" << "transform " << to_string(r.transform) << "\n";
        } else if (*op) {
            const auto A = load_fsmf(fileA), B = load_fsmf(fileB);
            emit(opname == "mul" ? mul(A, B) : add(A, B), out);
        } else if (*hk) {
            emit(hecke_T(load_fsmf(fileA), p, delta), out);
        } else if (*uop) {
            emit(hecke_U(load_fsmf(fileA), p), out);
        } else if (*ph) {
            std::cout << to_string(phi(load_fsmf(fileA)), static_cast<std::size_t>(terms)) << "\n";
        } else if (*eig) {
            const auto basis = basis_level1(weight, prec);
            const auto mons = monomials_level1(weight);
            std::cout << "basis:";
            for (const auto& m : mons) std::cout << " " << m.name();
            std::cout << "\n";
            if (basis.empty()) return 0;
            const RMatrix H = hecke_matrix(basis, p);
            std::cout << "T(" << p << ") matrix (rows act on coordinate vectors):\n";
            print_matrix(H);
            const auto e = eigen_decompose(H);
            std::cout << "charpoly: " << poly_to_string(e.charpoly) << "\n";
            for (const auto& pr : e.rational)
                for (const auto& v : pr.vectors) std::cout << "eigenvalue " << to_string(pr.value) << "  vector " << vec_string(v) << "\n";
            if (!e.irrational.empty()) std::cout << "irrational factor: " << poly_to_string(e.irrational) << "\n";
        } else if (*bas) {
            const auto mons = monomials_level1(weight);
            const auto basis = basis_level1(weight, prec);
            std::cout << "dim " << dim_level1(weight) << "\n";
            for (const auto& m : mons) std::cout << m.name() << "\n";
            std::cout << "rank " << coefficient_rank(basis) << " at precision " << prec << "\n";
        } else if (*exp) {
            const auto F = load_fsmf(fileA);
            const auto mons = monomials_level1(weight);
            const auto x = express_in_basis(F, basis_level1(weight, F.precision()));
            for (std::size_t i = 0; i < mons.size(); ++i) std::cout << mons[i].name() << " " << to_string(x[i]) << "\n";
        } else if (*th) {
            emit(theta_series(Lattice::from_file(gram), prec), out);
        } else if (*st) {
            return selftest();
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}
