#include "qkz/freefield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qkz/errors.hpp"
#include "qkz/qseries.hpp"

namespace qkz {
namespace {

std::vector<int> zero_positions(const SpinConfig& nu) {
  std::vector<int> ks;
  for (int i = 0; i < nu.n; ++i)
    if (nu.bits[i] == 0) ks.push_back(i);
  return ks;
}

void require_signs(const std::vector<int>& v, std::size_t l, const char* what) {
  if (v.size() != l) throw DomainError(std::string(what) + ": wrong sign vector length");
  for (int x : v)
    if (x != 1 && x != -1) throw DomainError(std::string(what) + ": signs must be +1 or -1");
}

// all sign vectors in {+1,-1}^l, +1 first
std::vector<std::vector<int>> sign_vectors(int l) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> v(l);
    for (int i = 0; i < l; ++i) v[i] = (mask >> (l - 1 - i)) & 1u ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<int> ScreenSignConfig::minus_positions() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] == -1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

cplx ghat(const SpinConfig& nu, const ScreenSignConfig& sc, const PointConfig& pts, const ParameterSet& ps) {
  const auto ks = zero_positions(nu);
  const int l = static_cast<int>(ks.size()), n = nu.n;
  const auto &t = pts.t, &z = pts.z, &u = pts.u;
  if (static_cast<int>(t.size()) != l || static_cast<int>(u.size()) != l) throw DomainError("ghat: need l values of t and u");
  require_signs(sc.eps, l, "ghat");
  require_signs(sc.mu, l, "ghat");
  const double k = ps.k;
  auto Q = [&](double e) { return ps.qpow(e); };
  cplx g{1.0, 0.0};
  for (int i = 0; i < l; ++i) {
    const cplx zk = z[ks[i]];
    g *= u[i] * (zk - Q(sc.mu[i] - 2 - k) * u[i]) /
         (checked_diff(zk, Q(-1 - k) * u[i], "ghat") * checked_diff(u[i], Q(k + 3) * zk, "ghat"));
  }
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < ks[j]; ++i)
      g *= (z[i] - Q(sc.mu[j] - 2 - k) * u[j]) / checked_diff(z[i], Q(-1 - k) * u[j], "ghat");
    for (int i = ks[j] + 1; i < n; ++i)
      g *= (u[j] - Q(k + 2 - sc.mu[j]) * z[i]) / checked_diff(u[j], Q(k + 3) * z[i], "ghat");
  }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      g *= (u[i] - Q(sc.mu[i] - sc.mu[j]) * u[j]) / checked_diff(u[i], Q(-2) * u[j], "ghat");
  for (int i = 0; i < l; ++i)
    for (int a = 0; a < l; ++a)
      g *= (u[i] - Q(-sc.mu[i] * (k + 1) - sc.eps[a]) * t[a]) / checked_diff(u[i], Q(-sc.mu[i] * (k + 2)) * t[a], "ghat");
  return g;
}

cplx g_tail(const std::vector<int>& eps, const std::vector<cplx>& t, const ParameterSet& ps) {
  const std::size_t l = t.size();
  require_signs(eps, l, "g_tail");
  const double qi2 = 1.0 / (ps.q * ps.q);
  cplx g{1.0, 0.0};
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = a + 1; b < l; ++b)
      g *= (ps.qpow(eps[b]) * t[b] - ps.qpow(eps[a]) * t[a]) / checked_diff(t[b], qi2 * t[a], "g_tail");
  return g;
}

cplx gfull(const SpinConfig& nu, const ScreenSignConfig& sc, const PointConfig& pts, const ParameterSet& ps) {
  return ghat(nu, sc, pts, ps) * g_tail(sc.eps, pts.t, ps);
}

cplx f_prefactor(const SpinConfig& nu, const std::vector<int>& mu, const PointConfig& pts, const ParameterSet& ps) {
  const auto ks = zero_positions(nu);
  const int l = static_cast<int>(ks.size()), n = nu.n, m = ps.m;
  require_signs(mu, l, "f_prefactor");
  if (static_cast<int>(pts.t.size()) != l) throw DomainError("f_prefactor: need l values of t");
  const double s = ps.s, q = ps.q;
  double qe = 0.0;
  for (int i = 1; i <= l; ++i) qe += static_cast<double>(n + m - 2 * l - (ks[i - 1] + 1) + i) * mu[i - 1];
  cplx f = std::pow(1.0 - q * q, l) * std::pow(q, qe);
  const double qk = std::pow(q, ps.k);
  for (int i = 1; i <= n; ++i) f *= std::pow(qk * pts.z[i - 1], s * (m + n - l - i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f *= xi(pts.z[i] / pts.z[j], ps);
  for (int a = 1; a <= l; ++a) f *= std::pow(pts.t[a - 1] / (q * q), 4.0 * s * (a - 1) - 2.0 * m * s);
  return f;
}

cplx i_residue_closed(const SpinConfig& nu, const ScreenSignConfig& sc, const PointConfig& pts, const ParameterSet& ps) {
  const auto ks = zero_positions(nu);
  const int l = static_cast<int>(ks.size());
  const auto &t = pts.t, &z = pts.z;
  if (static_cast<int>(t.size()) != l) throw DomainError("i_residue_closed: need l values of t");
  require_signs(sc.eps, l, "i_residue_closed");
  require_signs(sc.mu, l, "i_residue_closed");
  const double q = ps.q;
  const auto A = sc.minus_positions();
  const int r = static_cast<int>(A.size());

  // injective (a_1..a_r): walk permutations of {0..l-1} and keep distinct prefixes
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> prefixes;
  do {
    std::vector<int> pre(perm.begin(), perm.begin() + r);
    if (prefixes.empty() || prefixes.back() != pre) prefixes.push_back(pre);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(prefixes.begin(), prefixes.end());
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());

  cplx total{0.0, 0.0};
  for (const auto& asg : prefixes) {
    if (std::any_of(asg.begin(), asg.end(), [&](int a) { return sc.eps[a] != 1; })) continue;
    cplx term{1.0, 0.0};
    for (int i = 0; i < r; ++i) {
      const cplx ta = t[asg[i]];
      const int kk = ks[A[i] - 1];
      term *= ta / checked_diff(z[kk], q * ta, "i_residue_closed");
      for (int j = 0; j < kk; ++j) term *= (z[j] - ta / q) / checked_diff(z[j], q * ta, "i_residue_closed");
      for (int a = 0; a < l; ++a) {
        if (std::find(asg.begin() + i, asg.end(), a) != asg.end()) continue;
        term *= (ta - ps.qpow(-1 - sc.eps[a]) * t[a]) / checked_diff(ta, t[a], "i_residue_closed");
      }
    }
    total += term;
  }
  return std::pow(-1.0 / (q * q), r) * std::pow(q - 1.0 / q, r) * total;
}

SignSum signsum_g(const SpinConfig& nu, const std::vector<int>& mu, const PointConfig& pts, const ParameterSet& ps) {
  const int l = static_cast<int>(pts.t.size());
  SignSum out;
  for (const auto& eps : sign_vectors(l)) {
    int sign = 1;
    for (int e : eps) sign *= e;
    const ScreenSignConfig sc{eps, mu};
    const cplx v = static_cast<double>(sign) * i_residue_closed(nu, sc, pts, ps) * g_tail(eps, pts.t, ps);
    out.value += v;
    out.scale = std::max(out.scale, std::abs(v));
  }
  return out;
}

int theorem_q_exponent(const SpinConfig& nu) {
  const auto ks = zero_positions(nu);
  const int l = static_cast<int>(ks.size());
  int e = -2 * l + l * (l - 1) / 2;
  for (int k : ks) e -= k + 1;
  return e;
}

cplx theorem_rhs(const SpinConfig& nu, const PointConfig& pts, const ParameterSet& ps) {
  const int l = static_cast<int>(zero_positions(nu).size());
  SpinConfig flipped = SpinConfig::ones(nu.flipped().bits);
  return ps.qpow(theorem_q_exponent(nu)) * std::pow(ps.q - 1.0 / ps.q, l) * weight_w(flipped, pts, ps);
}

cplx f_component_closed(const SpinConfig& nu, const PointConfig& pts, const ParameterSet& ps) {
  const int l = static_cast<int>(zero_positions(nu).size());
  const int n = nu.n, m = ps.m;
  const double s = ps.s, k = ps.k;
  if (static_cast<int>(pts.t.size()) != l) throw DomainError("f_component_closed: need l values of t");
  const double qe = -(n + m + 2.0 - 2.0 * l) * l + k * s * n * (m + n - l) - 0.5 * k * s * n * (n + 1) +
                    4.0 * s * l * (m - l + 1);
  cplx f = (l % 2 ? -1.0 : 1.0) * ps.qpow(qe);
  for (int i = 1; i <= n; ++i) f *= std::pow(pts.z[i - 1], s * (m + n - l - i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f *= xi(pts.z[i] / pts.z[j], ps);
  for (int a = 1; a <= l; ++a) f *= std::pow(pts.t[a - 1], 2.0 * s * (2 * a - 2 - m) - 1.0);
  SpinConfig flipped = SpinConfig::ones(nu.flipped().bits);
  return f * phase_phi(pts, ps) * weight_w(flipped, pts, ps);
}

cplx f_component_assembled(const SpinConfig& nu, const PointConfig& pts, const ParameterSet& ps) {
  const int l = static_cast<int>(zero_positions(nu).size());
  const double q = ps.q;
  cplx sum{0.0, 0.0};
  for (const auto& mu : sign_vectors(l)) {
    int sign = 1;
    for (int x : mu) sign *= x;
    sum += static_cast<double>(sign) * f_prefactor(nu, mu, pts, ps) * signsum_g(nu, mu, pts, ps).value;
  }
  cplx pre = (l % 2 ? -1.0 : 1.0) * std::pow(q - 1.0 / q, -2 * l);
  for (const cplx& ta : pts.t) pre /= ta;
  return pre * phase_phi(pts, ps) * sum;
}

SignSum altsum_vanish(int N, const std::vector<cplx>& t, double q) {
  if (N < 1 || static_cast<int>(t.size()) != N) throw DomainError("altsum_vanish: need N >= 1 values");
  SignSum out;
  for (const auto& eps : sign_vectors(N)) {
    int sign = 1;
    for (int e : eps) sign *= e;
    cplx term = static_cast<double>(sign);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < i; ++j) term *= std::pow(q, eps[i]) * t[i] - std::pow(q, eps[j]) * t[j];
    out.value += term;
    out.scale = std::max(out.scale, std::abs(term));
  }
  return out;
}

const char* to_string(OpePair k) {
  switch (k) {
    case OpePair::SS: return "S.S";
    case OpePair::PhiS: return "phi.S";
    case OpePair::JS: return "J.S";
    case OpePair::PhiJ: return "phi.J";
    case OpePair::JPhi: return "J.phi";
    case OpePair::QComm: return "[phi,J]_q";
    case OpePair::JJ: return "J.J";
    case OpePair::PhiPhi: return "phi.phi";
  }
  return "?";
}

cplx ope_prefactor(OpePair kind, cplx a, cplx b, int s1, int s2, const ParameterSet& ps) {
  const double q = ps.q, k = ps.k, s = ps.s;
  auto Q = [&](double e) { return ps.qpow(e); };
  const cplx p{ps.p, 0.0};
  switch (kind) {
    case OpePair::SS:  // a = t1, b = t2, signs eps1, eps2
      return std::pow(a / (q * q), 4.0 * s) * Q(s1) * (a - Q(s2 - s1) * b) / checked_diff(a, Q(-2) * b, "S.S") *
             cfun(b / a, ps);
    case OpePair::PhiS: {  // a = z, b = t
      const cplx den = qpoch(b / (q * a), p, ps.eps_trunc);
      if (std::abs(den) < 1e-13) throw PoleError("phi.S: pole");
      return std::pow(Q(k) * a, -s) * qpoch(q * b / a, p, ps.eps_trunc) / den;
    }
    case OpePair::JS:  // a = u, b = t, signs mu, eps
      return Q(-s1) * (a - Q(-s1 * (k + 1) - s2) * b) / checked_diff(a, Q(-s1 * (k + 2)) * b, "J.S");
    case OpePair::PhiJ:  // a = z, b = u, sign mu
      return (a - Q(s2 - 2 - k) * b) / checked_diff(a, Q(-1 - k) * b, "phi.J");
    case OpePair::JPhi:  // a = u, b = z, sign mu
      return Q(s1) * (a - Q(k + 2 - s1) * b) / checked_diff(a, Q(k + 3) * b, "J.phi");
    case OpePair::QComm:  // a = z, b = u, sign mu
      return (1.0 - q * q) * b * (a - Q(s2 - 2 - k) * b) /
             (checked_diff(a, Q(-1 - k) * b, "[phi,J]_q") * checked_diff(b, Q(k + 3) * a, "[phi,J]_q"));
    case OpePair::JJ:  // a = u1, b = u2, signs mu1, mu2
      return Q(-s1) * (a - Q(s1 - s2) * b) / checked_diff(a, Q(-2) * b, "J.J");
    case OpePair::PhiPhi:  // a = z1, b = z2
      return std::pow(Q(k) * a, s) * xi(a / b, ps);
  }
  throw DomainError("ope_prefactor: unknown kind");
}

cplx ope_qcomm_from_pairs(cplx z, cplx u, int mu, const ParameterSet& ps) {
  return ope_prefactor(OpePair::PhiJ, z, u, 0, mu, ps) - ps.q * ope_prefactor(OpePair::JPhi, u, z, mu, 0, ps);
}

}  // namespace qkz
