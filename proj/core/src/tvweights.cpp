#include "qkz/tvweights.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qkz/errors.hpp"
#include "qkz/qseries.hpp"

namespace qkz {

cplx checked_diff(cplx a, cplx b, const char* what) {
  const cplx d = a - b;
  const double scale = std::max(std::abs(a), std::abs(b));
  if (std::abs(d) < 1e-10 * scale || d == cplx{0.0, 0.0})
    throw PoleError(std::string(what) + ": vanishing denominator");
  return d;
}

cplx weight_w(const SpinConfig& cfg, const PointConfig& pts, const ParameterSet& ps) {
  std::vector<int> ks;
  for (int i = 0; i < cfg.n; ++i)
    if (cfg.bits[i] == 1) ks.push_back(i);
  const int l = static_cast<int>(ks.size());
  const auto& t = pts.t;
  const auto& z = pts.z;
  if (static_cast<int>(t.size()) != l) throw DomainError("weight_w: need one t per 1-bit");
  if (static_cast<int>(z.size()) != cfg.n) throw DomainError("weight_w: need one z per leg");
  const double q = ps.q, qi = 1.0 / q, qi2 = qi * qi;

  cplx pre{1.0, 0.0};
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) pre *= (t[a] - t[b]) / checked_diff(qi2 * t[a], t[b], "weight_w prefactor");

  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  cplx total{0.0, 0.0};
  do {
    cplx term{1.0, 0.0};
    for (int i = 0; i < l; ++i) {
      const cplx ta = t[perm[i]];
      const int ki = ks[i];
      term *= ta / checked_diff(ta, qi * z[ki], "weight_w");
      for (int j = 0; j < ki; ++j) term *= (qi * ta - z[j]) / checked_diff(ta, qi * z[j], "weight_w");
      for (int j = i + 1; j < l; ++j) {
        const cplx tb = t[perm[j]];
        term *= (qi2 * ta - tb) / checked_diff(ta, tb, "weight_w");
      }
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return pre * total;
}

namespace {

cplx pole_checked_qpoch(cplx z, const ParameterSet& ps) {
  const cplx d = qpoch(z, ps.p, ps.eps_trunc);
  if (std::abs(d) < 1e-13) throw PoleError("phase_phi: denominator q-Pochhammer vanishes");
  return d;
}

}  // namespace

cplx phase_phi(const PointConfig& pts, const ParameterSet& ps) {
  const double q = ps.q, q2 = q * q;
  const cplx p{ps.p, 0.0};
  cplx out{1.0, 0.0};
  for (const cplx& ta : pts.t)
    for (const cplx& zi : pts.z) {
      const cplx x = ta / zi;
      out *= qpoch(q * x, p, ps.eps_trunc) / pole_checked_qpoch(x / q, ps);
    }
  const auto& t = pts.t;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      const cplx x = t[a] / t[b];
      out *= qpoch(x / q2, p, ps.eps_trunc) / pole_checked_qpoch(q2 * x, ps);
    }
  return out;
}

}  // namespace qkz
