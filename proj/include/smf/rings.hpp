#pragma once

// Generator catalogs for levels 1-4, level-1 dimensions and monomial bases,
// and coordinates of a form in a given basis.

#include <cstdint>
#include <string>
#include <vector>

#include "smf/fsmf.hpp"
#include "smf/linalg.hpp"

namespace smf {

struct GeneratorInfo {
    std::string name;
    Rational weight;
};

struct NamedForm {
    std::string name;
    FormalSMF form;
};

// Generator names and weights: level 1 {E4, E6, chi10, chi12, chi35}, level 2
// {X, Y, Z, K, chi19}, level 3 {alpha1, beta3, delta3, gamma4, chi14},
// level 4 {f1, g2, h2, f3, chi5, chi11}. Throws BadLevel.
std::vector<GeneratorInfo> catalog(int level);

// All generators at precision X, in catalog order.
std::vector<NamedForm> generators(int level, std::int64_t X);
// One generator (building only what it depends on). Throws UnknownGenerator.
FormalSMF generator(int level, const std::string& name, std::int64_t X);

// E4, E6, chi10, chi12, chi35.
std::vector<FormalSMF> igusa_generators(std::int64_t X);
inline std::vector<NamedForm> level2_generators(std::int64_t X) { return generators(2, X); }
inline std::vector<NamedForm> level3_generators(std::int64_t X) { return generators(3, X); }
inline std::vector<NamedForm> level4_generators(std::int64_t X) { return generators(4, X); }

// Number of monomials E4^a E6^b chi10^c chi12^d of weight k, plus those of weight k - 35.
std::int64_t dim_level1(int k);

struct Monomial {
    int e4 = 0, e6 = 0, c10 = 0, c12 = 0, c35 = 0;
    std::string name() const;
};
std::vector<Monomial> monomials_level1(int k);

// The monomials of weight k evaluated at precision X; throws InsufficientPrecision
// when their rank is below dim_level1(k).
std::vector<FormalSMF> basis_level1(int k, std::int64_t X);

// Rank of the coefficient matrix of the forms over all shared keys and components.
std::size_t coefficient_rank(const std::vector<FormalSMF>& forms);

// Exact coordinates of F in the basis, using every shared key. Throws NotInSpan,
// UnderDetermined.
RVec express_in_basis(const FormalSMF& F, const std::vector<FormalSMF>& basis);

}  // namespace smf
