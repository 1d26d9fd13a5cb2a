#pragma once

// Hecke operators T(p^delta) and U(p), Hecke matrices on a basis, eigenforms.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smf/fsmf.hpp"
#include "smf/linalg.hpp"

namespace smf {

// Representatives of SL(2,Z) / Gamma_0(p^beta):
// [[1,0],[j,1]] for j mod p^beta and S [[1,0],[p j',1]] for j' mod p^(beta-1).
std::vector<UnimodMat> coset_reps(std::int64_t p, int beta);
// Equivalent modulo Gamma_0(p^beta) from the right.
bool same_coset(const UnimodMat& U1, const UnimodMat& U2, std::int64_t p, int beta);

using CosetRepsFn = std::function<std::vector<UnimodMat>(int beta)>;

// Output precision floor(X / p^(2 delta)); throws InsufficientPrecision below 1.
FormalSMF hecke_T(const FormalSMF& F, std::int64_t p, int delta = 1);
// Same with a caller-supplied representative system.
FormalSMF hecke_T(const FormalSMF& F, std::int64_t p, int delta, const CosetRepsFn& reps);

FormalSMF hecke_U(const FormalSMF& F, std::int64_t p);

// H with T F_i = sum_l H[i][l] F_l, i.e. M N^-1 on greedily chosen pivots.
RMatrix hecke_matrix(const std::vector<FormalSMF>& basis, std::int64_t p);

struct EigenData {
    RPoly charpoly;
    struct Pair {
        Rational value;
        std::vector<RVec> vectors;  // coordinates in the basis
    };
    std::vector<Pair> rational;
    // Leftover factor of the characteristic polynomial with no rational root
    // (empty when it splits).
    RPoly irrational;
};

EigenData eigen_decompose(const RMatrix& H);
EigenData eigenforms(const std::vector<FormalSMF>& basis, std::int64_t p);

}  // namespace smf
