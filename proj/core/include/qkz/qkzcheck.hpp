#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qkz/ellspace.hpp"
#include "qkz/params.hpp"
#include "qkz/spinchain.hpp"

namespace qkz {

struct PsiResult {
  SpinVector psi;
  double magnitude = 0.0;  // largest quadrature magnitude over the components
};

using PsiFunction = std::function<PsiResult(const std::vector<cplx>&)>;

// Sum over the weight sector of (integral of Phi w W over the t-torus) v_eps.
PsiResult psi_tv(const StructuredW& w, const ParameterSet& ps, const std::vector<cplx>& z, int nodes = 256);

// Integral of Ftilde Wtilde with measure prod dt/(2 pi i). Throws DomainError
// when Wtilde fails its shift conditions.
PsiResult psi_tilde(const StructuredW& w, const ParameterSet& ps, const std::vector<cplx>& z, int nodes = 256);

// (-1)^l q^C with C the constant exponent of the closed form; psi_tilde = this * psi_tv.
cplx tilde_constant(const ParameterSet& ps);

struct QKZReport {
  int j = 0;
  SpinVector lhs;
  SpinVector rhs;
  double residual = 0.0;
  // both sides vanish at the quadrature scale; residual is then measured against `scale`
  bool degenerate = false;
  double scale = 0.0;
  int nodes = 0;
  double runtime_s = 0.0;
  std::string params;
};

// R_{j,j-1}(p z_j/z_{j-1})...R_{j,1}(p z_j/z_1) kappa^{bit j} R_{j,n}(z_j/z_n)...R_{j,j+1}(z_j/z_{j+1}) v
SpinVector qkz_rhs(const SpinVector& v, const std::vector<cplx>& z, int j, cplx kappa, const ParameterSet& ps);

QKZReport qkz_residual(const PsiFunction& psi, int j, const std::vector<cplx>& z, cplx kappa, const ParameterSet& ps,
                       int nodes = 0);

// Exponents (in units of s) of z_i after composing the two monomial steps literally,
// against the exponent in the closed form of Ftilde.
struct ExponentAudit {
  std::vector<Rational> literal;
  std::vector<Rational> display;
  std::vector<Rational> difference() const;
  bool consistent() const;
};
ExponentAudit transform_exponent_audit(const ParameterSet& ps);

// Literal composition: z-monomial of the rescaling step, then the normalization
// prefactor with the xi products, then the bit flip on every leg.
SpinVector transform_tilde(const SpinVector& f, const std::vector<cplx>& z, const ParameterSet& ps);

// Full correlation vector sum_nu F^{(nu)} v_nu from the closed form.
SpinVector f_vector(const PointConfig& pts, const ParameterSet& ps);

// Ftilde written out directly: (-1)^l q^C prod z^{s(m+n-2l-i)} prod t^{2s(2a-2-m)-1} Phi sum w_eps v_eps.
SpinVector f_tilde_display(const PointConfig& pts, const ParameterSet& ps);

// transform_tilde(f_vector) times prod z_i^{-s * audit difference_i}; equals f_tilde_display.
SpinVector f_tilde_from_closed(const PointConfig& pts, const ParameterSet& ps);

}  // namespace qkz
