#pragma once

#include "qkz/params.hpp"

namespace qkz {

// (z;x)_inf, truncated at the first N with |x|^N |z| / (1-|x|) < eps.
cplx qpoch(cplx z, cplx x, double eps = 1e-16);

// (z;x1,x2)_inf = prod_{i,j>=0} (1 - x1^i x2^j z), rectangular truncation.
cplx qpoch2(cplx z, cplx x1, cplx x2, double eps = 1e-16);

// theta(z) = (z;p)(p/z;p)(p;p)
cplx theta(cplx z, const ParameterSet& ps);

// (p/z;p,q^4)(pq^4/z;p,q^4) / (pq^2/z;p,q^4)^2
cplx xi(cplx z, const ParameterSet& ps);

// q^{1/2} (1/z;q^4)(q^4/z;q^4) / (q^2/z;q^4)^2
cplx rho(cplx z, const ParameterSet& ps);

// (q^{-2} z;p) / (q^2 z;p)
cplx cfun(cplx z, const ParameterSet& ps);

// Right-hand side of xi(pz)/xi(z): rho(z)/q^{1/2}.
cplx xi_shift_target(cplx z, const ParameterSet& ps);

}  // namespace qkz
