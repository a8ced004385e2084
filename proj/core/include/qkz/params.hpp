#pragma once

#include <complex>
#include <string>

namespace qkz {

using cplx = std::complex<double>;

// Global scalars. q is kept real in (0,1) so that p and every power used
// downstream are real positive and p-shifts never cross a branch cut.
struct ParameterSet {
  double q = 0.6;
  double k = 1.0;
  double p = 0.0;      // q^{2(k+2)}
  double s = 0.0;      // 1/(2(k+2)), so p^s = q
  int m = 0;
  int n = 1;
  int l = 0;
  double kappa = 1.0;  // q^{2l-2-n-2m}
  double eps_trunc = 1e-16;
  double eps_check = 1e-12;

  // Validates and fills the derived fields. Throws DomainError.
  static ParameterSet make(double q, double k, int n = 1, int l = 0, int m = 0);

  // Same q,k with another (n,l,m).
  ParameterSet with_nlm(int n_, int l_, int m_) const;

  double qpow(double e) const;
  double ppow(double e) const;
  std::string summary() const;
};

}  // namespace qkz
