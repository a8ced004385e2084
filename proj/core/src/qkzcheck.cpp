#include "qkz/qkzcheck.hpp"

#include <chrono>
#include <cmath>

#include "qkz/contours.hpp"
#include "qkz/errors.hpp"
#include "qkz/freefield.hpp"
#include "qkz/qseries.hpp"
#include "qkz/tvweights.hpp"

namespace qkz {
namespace {

double rd(const Rational& r) { return boost::rational_cast<double>(r); }

double closed_form_q_exponent(const ParameterSet& ps) {
  const double n = ps.n, m = ps.m, l = ps.l, k = ps.k, s = ps.s;
  return -(n + m + 2.0 - 2.0 * l) * l + k * s * n * (m + n - l) - 0.5 * k * s * n * (n + 1) + 4.0 * s * l * (m - l + 1);
}

// scalar applied to every component by transform_tilde, before the flip
cplx transform_scalar(const std::vector<cplx>& z, const ParameterSet& ps) {
  const int n = ps.n, m = ps.m, l = ps.l;
  const double s = ps.s;
  cplx c{1.0, 0.0};
  cplx prod{1.0, 0.0};
  for (int i = 1; i <= n; ++i) {
    c *= std::pow(z[i - 1], s * (m + n - 2 * l - i + 1.5));
    c *= std::pow(z[i - 1], -s * (m + 0.5 * n - l + 1));
    prod *= z[i - 1];
  }
  cplx norm = std::pow(prod, s / 2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) norm *= xi(z[i] / z[j], ps);
  return c / norm;
}

cplx audit_correction(const std::vector<cplx>& z, const ParameterSet& ps) {
  const auto diff = transform_exponent_audit(ps).difference();
  cplx c{1.0, 0.0};
  for (int i = 0; i < ps.n; ++i)
    if (diff[i] != Rational(0)) c *= std::pow(z[i], -ps.s * rd(diff[i]));
  return c;
}

}  // namespace

PsiResult psi_tv(const StructuredW& w, const ParameterSet& ps, const std::vector<cplx>& z, int nodes) {
  if (w.n != ps.n || w.l != ps.l) throw DomainError("psi_tv: W dimensions do not match parameters");
  const ContourPlan plan = build_t_contours(ps, z, nodes);
  PsiResult out{SpinVector(ps.n), 0.0};
  for (const auto& bits : sector(ps.n, ps.l)) {
    const SpinConfig eps = SpinConfig::ones(bits);
    const Integrand f = [&](const std::vector<cplx>& t) {
      const PointConfig pts{z, t, {}};
      return phase_phi(pts, ps) * weight_w(eps, pts, ps) * eval_w(w, pts, ps);
    };
    const IntegralResult r = integrate(plan, f, Measure::DtOverT);
    out.psi.at(bits) = r.value;
    out.magnitude = std::max(out.magnitude, r.magnitude);
  }
  return out;
}

cplx tilde_constant(const ParameterSet& ps) {
  return (ps.l % 2 ? -1.0 : 1.0) * std::pow(ps.q, closed_form_q_exponent(ps));
}

PsiResult psi_tilde(const StructuredW& w, const ParameterSet& ps, const std::vector<cplx>& z, int nodes) {
  if (w.n != ps.n || w.l != ps.l) throw DomainError("psi_tilde: W dimensions do not match parameters");
  const StructuredW wt = tilde_w(w, ps);
  const ConditionReport rep = check_tilde_conditions(wt, ps);
  for (const auto& c : rep.checks)
    if (c.match != MatchKind::Exact && c.match != MatchKind::Numeric)
      throw DomainError("psi_tilde: shift condition fails for " + c.variable + ": " + c.multiplier.describe());
  const ContourPlan plan = build_t_contours(ps, z, nodes);
  const cplx zfac = transform_scalar(z, ps) * audit_correction(z, ps);
  PsiResult out{SpinVector(ps.n), 0.0};
  for (const auto& bits : sector(ps.n, ps.l)) {
    // component eps of Ftilde comes from the F component nu = (-eps)
    const SpinConfig nu = SpinConfig::zeros(SpinConfig::ones(bits).flipped().bits);
    const Integrand f = [&](const std::vector<cplx>& t) {
      const PointConfig pts{z, t, {}};
      return f_component_closed(nu, pts, ps) * eval_w(wt, pts, ps);
    };
    const IntegralResult r = integrate(plan, f, Measure::Dt);
    out.psi.at(bits) = zfac * r.value;
    out.magnitude = std::max(out.magnitude, std::abs(zfac) * r.magnitude);
  }
  return out;
}

SpinVector qkz_rhs(const SpinVector& v, const std::vector<cplx>& z, int j, cplx kappa, const ParameterSet& ps) {
  const int n = v.n();
  if (j < 1 || j > n || static_cast<int>(z.size()) != n) throw DomainError("qkz_rhs: bad coordinate index");
  const cplx zj = z[j - 1];
  SpinVector out = v;
  for (int i = j + 1; i <= n; ++i) out = r_apply(zj / z[i - 1], j, i, out, ps);
  out = kappa_apply(kappa, j, out);
  for (int i = 1; i < j; ++i) out = r_apply(ps.p * zj / z[i - 1], j, i, out, ps);
  return out;
}

QKZReport qkz_residual(const PsiFunction& psi, int j, const std::vector<cplx>& z, cplx kappa, const ParameterSet& ps,
                       int nodes) {
  const auto start = std::chrono::steady_clock::now();
  if (j < 1 || j > static_cast<int>(z.size())) throw DomainError("qkz_residual: j out of range");
  std::vector<cplx> zs = z;
  zs[j - 1] *= ps.p;
  const PsiResult shifted = psi(zs);
  const PsiResult base = psi(z);
  QKZReport rep;
  rep.j = j;
  rep.nodes = nodes;
  rep.params = ps.summary();
  rep.lhs = shifted.psi;
  rep.rhs = qkz_rhs(base.psi, z, j, kappa, ps);
  const double diff = (rep.lhs - rep.rhs).sup_norm();
  const double side = std::max(rep.lhs.sup_norm(), rep.rhs.sup_norm());
  rep.scale = std::max(shifted.magnitude, base.magnitude);
  if (side < 1e-10 * rep.scale) {
    rep.degenerate = true;
    rep.residual = rep.scale > 0.0 ? diff / rep.scale : 0.0;
  } else {
    rep.residual = diff / side;
  }
  rep.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<Rational> ExponentAudit::difference() const {
  std::vector<Rational> d(literal.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = literal[i] - display[i];
  return d;
}

bool ExponentAudit::consistent() const {
  for (const auto& x : difference())
    if (x != Rational(0)) return false;
  return true;
}

ExponentAudit transform_exponent_audit(const ParameterSet& ps) {
  const long long n = ps.n, m = ps.m, l = ps.l;
  ExponentAudit a;
  for (long long i = 1; i <= n; ++i) {
    // closed form of F, rescaling monomial, normalization monomial, (prod z)^{-1/2}
    Rational lit = Rational(m + n - l - i) + Rational(2 * (m + n - 2 * l - i) + 3, 2) - Rational(2 * m + n - 2 * l + 2, 2) -
                   Rational(1, 2);
    a.literal.push_back(lit);
    a.display.push_back(Rational(m + n - 2 * l - i));
  }
  return a;
}

SpinVector transform_tilde(const SpinVector& f, const std::vector<cplx>& z, const ParameterSet& ps) {
  if (f.n() != ps.n || static_cast<int>(z.size()) != ps.n) throw DomainError("transform_tilde: size mismatch");
  SpinVector out = f;
  out *= transform_scalar(z, ps);
  return flip_all(out);
}

SpinVector f_vector(const PointConfig& pts, const ParameterSet& ps) {
  SpinVector out(ps.n);
  for (const auto& bits : sector(ps.n, ps.n - ps.l)) out.at(bits) = f_component_closed(SpinConfig::zeros(bits), pts, ps);
  return out;
}

SpinVector f_tilde_display(const PointConfig& pts, const ParameterSet& ps) {
  const int n = ps.n, m = ps.m, l = ps.l;
  const double s = ps.s;
  cplx c = tilde_constant(ps) * phase_phi(pts, ps);
  for (int i = 1; i <= n; ++i) c *= std::pow(pts.z[i - 1], s * (m + n - 2 * l - i));
  for (int a = 1; a <= l; ++a) c *= std::pow(pts.t[a - 1], 2.0 * s * (2 * a - 2 - m) - 1.0);
  SpinVector out(n);
  for (const auto& bits : sector(n, l)) out.at(bits) = c * weight_w(SpinConfig::ones(bits), pts, ps);
  return out;
}

SpinVector f_tilde_from_closed(const PointConfig& pts, const ParameterSet& ps) {
  SpinVector out = transform_tilde(f_vector(pts, ps), pts.z, ps);
  out *= audit_correction(pts.z, ps);
  return out;
}

}  // namespace qkz
