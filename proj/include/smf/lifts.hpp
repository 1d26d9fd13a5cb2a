#pragma once

#include <cstdint>

#include "smf/fsmf.hpp"
#include "smf/jacobi.hpp"

namespace smf {

// C([a,b,c]) = sum_{delta | (a,b,c)} delta^(k-1) d(ac/delta^2, b/delta), with
// C([0,0,0]) = -(B_k / 2k) d(0,0). Character det^k, weight (k, 0).
FormalSMF maass_lift(const JacobiIdx1& phi, long k, std::int64_t X);

// Degree-2 Siegel Eisenstein series with constant term 1.
FormalSMF eisenstein2(int k, std::int64_t X);

// Jacobi precision (q-power bound) needed to lift to precision X.
inline std::int64_t jacobi_nmax_for(std::int64_t X) { return (X + 4) / 4; }

}  // namespace smf
