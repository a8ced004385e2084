#pragma once

#include <vector>

#include "qkz/params.hpp"
#include "qkz/spinchain.hpp"

namespace qkz {

struct PointConfig {
  std::vector<cplx> z;
  std::vector<cplx> t;
  std::vector<cplx> u;  // only used by the free-field module
};

// a - b, throwing PoleError when |a - b| < 1e-10 * max(|a|,|b|).
cplx checked_diff(cplx a, cplx b, const char* what);

// Weight function for the component whose 1-bits sit at k_1 < ... < k_l.
// The support is always read from the 1-bits of cfg.bits.
cplx weight_w(const SpinConfig& cfg, const PointConfig& pts, const ParameterSet& ps);

// prod_{a,i} (q t_a/z_i;p)/(q^-1 t_a/z_i;p) * prod_{a<b} (q^-2 t_a/t_b;p)/(q^2 t_a/t_b;p)
cplx phase_phi(const PointConfig& pts, const ParameterSet& ps);

}  // namespace qkz
