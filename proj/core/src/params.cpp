#include "qkz/params.hpp"

#include <cmath>
#include <sstream>

#include "qkz/errors.hpp"

namespace qkz {

ParameterSet ParameterSet::make(double q, double k, int n, int l, int m) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
  if (!(k > -1.0)) throw DomainError("k must exceed -1 (contour window p/q < q is empty otherwise)");
  if (n < 1) throw DomainError("n must be positive");
  if (l < 0 || l > n) throw DomainError("l must satisfy 0 <= l <= n");
  if (m < 0) throw DomainError("m must be nonnegative");
  ParameterSet ps;
  ps.q = q;
  ps.k = k;
  ps.n = n;
  ps.l = l;
  ps.m = m;
  ps.s = 1.0 / (2.0 * (k + 2.0));
  ps.p = std::pow(q, 2.0 * (k + 2.0));
  ps.kappa = std::pow(q, 2.0 * l - 2.0 - n - 2.0 * m);
  return ps;
}

ParameterSet ParameterSet::with_nlm(int n_, int l_, int m_) const {
  ParameterSet ps = make(q, k, n_, l_, m_);
  ps.eps_trunc = eps_trunc;
  ps.eps_check = eps_check;
  return ps;
}

double ParameterSet::qpow(double e) const { return std::pow(q, e); }
double ParameterSet::ppow(double e) const { return std::pow(p, e); }

std::string ParameterSet::summary() const {
  std::ostringstream os;
  os << "q=" << q << " k=" << k << " n=" << n << " l=" << l << " m=" << m;
  return os.str();
}

}  // namespace qkz
