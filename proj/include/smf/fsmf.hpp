#pragma once

// Formal Siegel modular forms: coefficient maps on reduced forms of bounded
// discriminant, extended to all of Q by C(A.f) = chi(A) A.C(f).

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smf/coeff.hpp"
#include "smf/qseries.hpp"
#include "smf/quadform.hpp"

namespace smf {

struct Weight {
    Rational k = 0;
    int j = 0;
    bool known = false;

    static Weight of(const Rational& k, int j = 0) { return {k, j, true}; }
    friend bool operator==(const Weight&, const Weight&) = default;
};

class FormalSMF {
public:
    FormalSMF();
    FormalSMF(std::int64_t X, Character chi, Module mod, Weight w = {});

    // C([0,0,0]) = 1, everything else 0.
    static FormalSMF one(std::int64_t X);

    std::int64_t precision() const { return X_; }
    Character character() const { return chi_; }
    const Module& module() const { return mod_; }
    const Weight& weight() const { return w_; }
    void set_weight(const Weight& w) { w_ = w; }
    void set_character(Character chi) { chi_ = chi; }

    const PrecisionIndex& index() const { return *idx_; }
    std::size_t size() const { return idx_->size(); }
    const BinQF& key(std::size_t i) const { return idx_->forms()[i]; }
    Rational* data(std::size_t i) { return data_.data() + i * width(); }
    const Rational* data(std::size_t i) const { return data_.data() + i * width(); }
    std::size_t width() const { return static_cast<std::size_t>(mod_.width()); }

    // Value at a stored (reduced) key; throws OutOfPrecision otherwise.
    CoeffValue at(const BinQF& reduced) const;
    void set(const BinQF& reduced, const CoeffValue& v);
    void set(const BinQF& reduced, const Rational& v);

    // C(f) for any psd f within precision.
    CoeffValue coefficient(const BinQF& f) const;
    void coefficient_into(const BinQF& f, Rational* out) const;

    bool is_zero() const;
    FormalSMF truncated(std::int64_t X) const;

    friend bool operator==(const FormalSMF& x, const FormalSMF& y);

private:
    std::int64_t X_;
    Character chi_;
    Module mod_;
    Weight w_;
    std::shared_ptr<const PrecisionIndex> idx_;
    std::vector<Rational> data_;
};

std::string describe(const FormalSMF& F);

// Dense table of C(f) for psd f with a <= A, c <= C. Entries outside the
// source precision are marked missing.
class DenseTable {
public:
    DenseTable(const FormalSMF& F, std::int64_t A, std::int64_t C, bool strict);

    std::int64_t max_a() const { return A_; }
    std::int64_t max_c() const { return C_; }
    const Module& module() const { return mod_; }
    bool contains(const BinQF& f) const;
    bool present(const BinQF& f) const;
    const Rational* get(const BinQF& f) const;  // null when missing or outside the box
    CoeffValue value(const BinQF& f) const;
    // Forms stored in the box, in (a, c, b) order.
    std::vector<BinQF> forms() const;

private:
    std::ptrdiff_t slot(const BinQF& f) const;

    std::int64_t A_, C_;
    Module mod_;
    std::vector<std::int64_t> start_;  // per (a, c): first slot, b runs from -r to r
    std::vector<Rational> data_;
    std::vector<char> present_;
};

DenseTable expand_box(const FormalSMF& F, std::int64_t A, std::int64_t C);

FormalSMF add(const FormalSMF& F, const FormalSMF& G);
FormalSMF sub(const FormalSMF& F, const FormalSMF& G);
FormalSMF scale(const FormalSMF& F, const Rational& s);
FormalSMF mul(const FormalSMF& F, const FormalSMF& G);
FormalSMF power(const FormalSMF& F, int e);
// r -> r e_chi.
FormalSMF embed(const FormalSMF& F);
// Extract one character component of a group-ring form.
FormalSMF component(const FormalSMF& F, Character chi);

// C'(f) = C(d f).
FormalSMF scale_index(const FormalSMF& F, std::int64_t d);
// C'(f) = C(f/d), zero off d Q.
FormalSMF unscale_index(const FormalSMF& F, std::int64_t d);
// C'(f) = C(d f) at precision floor(X/d^2), after checking that every stored
// nonzero coefficient sits on d Q (SupportNotDivisible otherwise).
FormalSMF contract_index(const FormalSMF& F, std::int64_t d);

QSeries phi(const FormalSMF& F);

// Divide by C(f) at the given key (must be a nonzero scalar).
FormalSMF normalize_at(const FormalSMF& F, const BinQF& f);
// Divide by the first nonzero coefficient in key order; returns the key used.
FormalSMF normalize_first_nonzero(const FormalSMF& F, BinQF* used = nullptr);
std::optional<BinQF> first_nonzero(const FormalSMF& F);

// Expansion on an explicit finite set of psd forms, no symmetry assumed.
class RawFourier {
public:
    RawFourier(std::int64_t A, std::int64_t C, Module mod = Module::scalar());

    std::int64_t max_a() const { return A_; }
    std::int64_t max_c() const { return C_; }
    const Module& module() const { return mod_; }
    bool covers(const BinQF& f) const { return f.a <= A_ && f.c <= C_ && is_psd(f); }
    // Zero value when f is covered but not stored.
    CoeffValue coefficient(const BinQF& f) const;
    void add_to(const BinQF& f, const CoeffValue& v);
    void add_to(const BinQF& f, const Rational& v);
    const std::map<BinQF, CoeffValue>& entries() const { return m_; }
    RawFourier scaled(const Rational& s) const;
    RawFourier operator+(const RawFourier& o) const;

private:
    std::int64_t A_, C_;
    Module mod_;
    std::map<BinQF, CoeffValue> m_;
};

// Box sides needed so that promote() can check every reduced key at precision X.
std::int64_t promote_box_a(std::int64_t X);
std::int64_t promote_box_c(std::int64_t X);
// Box sides covering all psd forms within precision X.
std::int64_t precision_box_a(std::int64_t X);
std::int64_t precision_box_c(std::int64_t X);

FormalSMF promote(const RawFourier& raw, std::int64_t X, Weight w = {});

// C'(f) = C(f/d): keys and box multiplied by d.
RawFourier unscale_index(const RawFourier& raw, std::int64_t d);
// C'(f) = C(d f): requires every nonzero entry on d Q (SupportNotDivisible).
RawFourier contract_index(const RawFourier& raw, std::int64_t d);

// Coefficient evaluator on arbitrary psd forms, used to audit a stored form
// against an independent direct computation.
using DirectEvaluator = std::function<CoeffValue(const BinQF&)>;

struct AuditReport {
    bool ok = true;
    int checks = 0;
    std::string witness;
};

// Random checks C(A.f) == chi(A) A.C(f) with A a word of length <= 6 in S, T, E,
// plus the stabilizer conditions at every stored key. Without a direct
// evaluator the stored data is checked against itself through stabilizers
// and, on a dense box, against the explicitly expanded neighbours.
AuditReport audit_equivariance(const FormalSMF& F, std::mt19937_64& rng, int samples = 50,
                               const DirectEvaluator& direct = {});

}  // namespace smf
