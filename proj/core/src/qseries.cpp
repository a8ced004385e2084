#include "qkz/qseries.hpp"

#include <cmath>
#include <string>

#include "qkz/errors.hpp"

namespace qkz {
namespace {

constexpr int kMaxFactors = 1000000;
// factor magnitude below this counts as a hit pole when it sits in a denominator
constexpr double kPoleFactor = 1e-14;

cplx qpoch_tracked(cplx z, cplx x, double eps, double* min_factor) {
  const double ax = std::abs(x);
  if (!(ax < 1.0)) throw DomainError("q-Pochhammer base must satisfy |x| < 1");
  cplx out{1.0, 0.0};
  cplx term = z;
  double bound = std::abs(z) / (1.0 - ax);
  for (int j = 0; bound >= eps; ++j) {
    if (j >= kMaxFactors) throw NumericAbort("q-Pochhammer truncation did not converge");
    cplx f = 1.0 - term;
    if (min_factor) *min_factor = std::min(*min_factor, std::abs(f));
    out *= f;
    term *= x;
    bound *= ax;
  }
  return out;
}

cplx denominator(cplx z, cplx x, double eps, const char* what) {
  double mf = 1.0;
  cplx d = qpoch_tracked(z, x, eps, &mf);
  if (mf < kPoleFactor || d == cplx{0.0, 0.0})
    throw PoleError(std::string(what) + ": evaluation at a pole");
  return d;
}

cplx qpoch2_tracked(cplx z, cplx x1, cplx x2, double eps, double* min_factor) {
  const double a1 = std::abs(x1), a2 = std::abs(x2);
  if (!(a1 < 1.0) || !(a2 < 1.0)) throw DomainError("double q-Pochhammer bases must satisfy |x| < 1");
  cplx out{1.0, 0.0};
  cplx zi = z;
  double bound = std::abs(z) / ((1.0 - a1) * (1.0 - a2));
  for (int i = 0; bound >= eps; ++i) {
    if (i >= kMaxFactors) throw NumericAbort("double q-Pochhammer truncation did not converge");
    out *= qpoch_tracked(zi, x2, eps, min_factor);
    zi *= x1;
    bound *= a1;
  }
  return out;
}

void require_nonzero(cplx z, const char* what) {
  if (z == cplx{0.0, 0.0}) throw DomainError(std::string(what) + ": argument must be nonzero");
}

}  // namespace

cplx qpoch(cplx z, cplx x, double eps) { return qpoch_tracked(z, x, eps, nullptr); }

cplx qpoch2(cplx z, cplx x1, cplx x2, double eps) { return qpoch2_tracked(z, x1, x2, eps, nullptr); }

cplx theta(cplx z, const ParameterSet& ps) {
  require_nonzero(z, "theta");
  const cplx p{ps.p, 0.0};
  return qpoch(z, p, ps.eps_trunc) * qpoch(p / z, p, ps.eps_trunc) * qpoch(p, p, ps.eps_trunc);
}

cplx xi(cplx z, const ParameterSet& ps) {
  require_nonzero(z, "xi");
  const cplx p{ps.p, 0.0};
  const double q2 = ps.q * ps.q, q4 = q2 * q2;
  const cplx w = p / z;
  double mf = 1.0;
  cplx den = qpoch2_tracked(w * q2, p, q4, ps.eps_trunc, &mf);
  if (mf < kPoleFactor || den == cplx{0.0, 0.0}) throw PoleError("xi: evaluation at a pole");
  cplx num = qpoch2(w, p, q4, ps.eps_trunc) * qpoch2(w * q4, p, q4, ps.eps_trunc);
  return num / (den * den);
}

cplx xi_shift_target(cplx z, const ParameterSet& ps) {
  require_nonzero(z, "xi_shift_target");
  const double q2 = ps.q * ps.q, q4 = q2 * q2;
  const cplx w = 1.0 / z;
  cplx den = denominator(q2 * w, q4, ps.eps_trunc, "xi_shift_target");
  return qpoch(w, q4, ps.eps_trunc) * qpoch(q4 * w, q4, ps.eps_trunc) / (den * den);
}

cplx rho(cplx z, const ParameterSet& ps) {
  require_nonzero(z, "rho");
  return std::sqrt(ps.q) * xi_shift_target(z, ps);
}

cplx cfun(cplx z, const ParameterSet& ps) {
  const double q2 = ps.q * ps.q;
  const cplx p{ps.p, 0.0};
  cplx den = denominator(q2 * z, p, ps.eps_trunc, "cfun");
  return qpoch(z / q2, p, ps.eps_trunc) / den;
}

}  // namespace qkz
