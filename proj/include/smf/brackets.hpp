#pragma once

// Differential operators on formal forms: d/dZ, the Satoh bracket, the Sym^4
// bracket and the Wronskian of four scalar forms. The factors 2 pi i are
// absorbed: D_tau, D_z, D_tau' multiply C([a,b,c]) by a, b, c.

#include "smf/fsmf.hpp"

namespace smf {

// C(f) (a X^2 + b XY + c Y^2); same character, values of degree 2.
FormalSMF dZ(const FormalSMF& F);
// C(f) (a X^2 + b XY + c Y^2)^2.
FormalSMF dZZ(const FormalSMF& F);

// (1/k) G dZ F - (1/k') F dZ G
FormalSMF satoh_bracket(const FormalSMF& F, const FormalSMF& G);

// k'(k'+1)/2 G F_ZZ - (k'+1)(k+1) F_Z G_Z + k(k+1)/2 F G_ZZ, k even.
FormalSMF ibukiyama_sym4(const FormalSMF& F, const FormalSMF& G);

// Sum over T1 + T2 + T3 + T4 = f of prod C_i(T_i) det(k_i; a_i; b_i; c_i).
// With definite_tail the sum is restricted to definite T3, T4.
FormalSMF wronskian(const FormalSMF& F1, const FormalSMF& F2, const FormalSMF& F3, const FormalSMF& F4,
                    bool definite_tail = false);

}  // namespace smf
