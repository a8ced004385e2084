#include "qkz/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qkz/contours.hpp"
#include "qkz/ellspace.hpp"
#include "qkz/errors.hpp"
#include "qkz/freefield.hpp"
#include "qkz/qkzcheck.hpp"
#include "qkz/qseries.hpp"
#include "qkz/spinchain.hpp"

namespace qkz::checks {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

json cjson(cplx c) { return json::array({c.real(), c.imag()}); }

json cjson(const std::vector<cplx>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(cjson(c));
  return out;
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  // modulus log-uniform in [lo, hi], uniform phase
  cplx point(double lo, double hi) {
    const double r = std::exp(uniform(std::log(lo), std::log(hi)));
    return std::polar(r, uniform(0.0, kTwoPi));
  }
  int sign() { return uniform(0.0, 1.0) < 0.5 ? -1 : 1; }
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

std::vector<std::vector<int>> all_signs(int l) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<int> s(l);
    for (int a = 0; a < l; ++a) s[a] = (mask >> a) & 1 ? 1 : -1;
    out.push_back(s);
  }
  return out;
}

json bits_json(const std::vector<int>& bits) { return json(bits); }

// Generic (t, z): z unit modulus and separated, t in an annulus around the unit circle.
PointConfig generic_point(const ParameterSet& ps, Draw& d) {
  PointConfig pts;
  pts.z = auto_z(ps.n, d.next());
  for (int a = 0; a < ps.l; ++a) pts.t.push_back(d.point(0.4, 1.6));
  return pts;
}

}  // namespace

void CheckSuite::add(json inputs, double residual, double tol) {
  cases.push_back(CheckCase{std::move(inputs), residual, tol, std::isfinite(residual) && residual < tol});
}

void CheckSuite::add_flag(json inputs, bool ok) {
  cases.push_back(CheckCase{std::move(inputs), ok ? 0.0 : 1.0, 0.5, ok});
}

void CheckSuite::merge(const CheckSuite& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

double CheckSuite::max_residual() const {
  double r = 0.0;
  for (const auto& c : cases) r = std::max(r, c.residual);
  return r;
}

bool CheckSuite::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
}

std::vector<cplx> auto_z(int n, std::uint64_t seed, double min_gap) {
  if (n * min_gap >= kTwoPi) throw DomainError("auto_z: phase gap too large for n points");
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (;;) {
    std::vector<double> ph(n);
    for (auto& x : ph) x = phase(gen);
    std::vector<double> sorted = ph;
    std::sort(sorted.begin(), sorted.end());
    double gap = n > 1 ? sorted.front() + kTwoPi - sorted.back() : kTwoPi;
    for (int i = 1; i < n; ++i) gap = std::min(gap, sorted[i] - sorted[i - 1]);
    if (gap < min_gap) continue;
    std::vector<cplx> z;
    for (double x : ph) z.push_back(std::polar(1.0, x));
    return z;
  }
}

double rel_err(cplx a, cplx b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

CheckSuite qseries_identities(const ParameterSet& ps, std::uint64_t seed, int points) {
  CheckSuite suite{"qseries", {}};
  Draw d(seed);
  const cplx p{ps.p, 0.0};
  for (int i = 0; i < points; ++i) {
    const cplx z = d.point(0.5, 2.0);
    const cplx th = theta(z, ps);
    suite.add({{"identity", "theta-quasi-periodicity"}, {"z", cjson(z)}}, rel_err(theta(p * z, ps), -th / z), 1e-12);
    suite.add({{"identity", "theta-inversion"}, {"z", cjson(z)}},
              std::abs(theta(1.0 / z, ps) + th / z) / std::max(1.0, std::abs(th)), 1e-12);
    suite.add({{"identity", "xi-shift"}, {"z", cjson(z)}}, rel_err(xi(p * z, ps), xi_shift_target(z, ps) * xi(z, ps)),
              1e-12);
  }
  return suite;
}

CheckSuite rmatrix_properties(const ParameterSet& ps, std::uint64_t seed, int draws) {
  CheckSuite suite{"rmatrix", {}};

  const Mat4 r1 = r_matrix(1.0, ps.q);
  bool perm = true;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      // P(e_{2a+b}) = e_{2b+a}
      const int target = 2 * (c & 1) + (c >> 1);
      perm = perm && r1[r][c] == cplx(r == target ? 1.0 : 0.0, 0.0);
    }
  suite.add_flag({{"property", "R(1)-permutation"}}, perm);

  Draw d(seed);
  for (int i = 0; i < draws; ++i) {
    const cplx z = d.point(0.5, 2.0);
    const cplx w = d.point(0.5, 2.0);
    double res = 0.0;
    for (std::size_t e = 0; e < 8; ++e) {
      const SpinVector v = SpinVector::basis(SpinVector::bits_of(e, 3));
      const SpinVector lhs = r_apply(z, 1, 2, r_apply(z * w, 1, 3, r_apply(w, 2, 3, v, ps), ps), ps);
      const SpinVector rhs = r_apply(w, 2, 3, r_apply(z * w, 1, 3, r_apply(z, 1, 2, v, ps), ps), ps);
      res = std::max(res, (lhs - rhs).sup_norm());
    }
    suite.add({{"property", "yang-baxter"}, {"z", cjson(z)}, {"w", cjson(w)}}, res, 1e-12);

    bool conserved = true;
    const int n = 4;
    for (std::size_t e = 0; e < (1u << n); ++e) {
      const auto bits = SpinVector::bits_of(e, n);
      const int ones = static_cast<int>(std::count(bits.begin(), bits.end(), 1));
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          const SpinVector out = r_apply(z, a, b, SpinVector::basis(bits), ps);
          for (std::size_t f = 0; f < out.size(); ++f) {
            const auto fb = SpinVector::bits_of(f, n);
            if (std::count(fb.begin(), fb.end(), 1) != ones && out[f] != cplx(0.0, 0.0)) conserved = false;
          }
        }
    }
    suite.add_flag({{"property", "weight-conservation"}, {"z", cjson(z)}}, conserved);
  }
  return suite;
}

CheckSuite alternating_sum(int n_max, int draws, std::uint64_t seed, double q) {
  CheckSuite suite{"alternating-sum", {}};
  Draw d(seed);
  for (int N = 1; N <= n_max; ++N)
    for (int i = 0; i < draws; ++i) {
      std::vector<cplx> t;
      for (int a = 0; a < N; ++a) t.push_back(d.point(0.5, 2.0));
      const SignSum s = altsum_vanish(N, t, q);
      suite.add({{"N", N}, {"t", cjson(t)}}, s.scale > 0.0 ? std::abs(s.value) / s.scale : std::abs(s.value), 1e-12);
    }
  return suite;
}

CheckSuite u_integral(const ParameterSet& base, std::uint64_t seed, int points, int nodes) {
  CheckSuite suite{"u-integral", {}};
  Draw d(seed);
  for (int n = 1; n <= 2; ++n) {
    const ParameterSet ps = base.with_nlm(n, 1, base.m);
    for (int i = 0; i < points; ++i) {
      PointConfig pts;
      pts.z = auto_z(n, d.next());
      const double r = build_t_contours(ps, pts.z, nodes).radii.at(0);
      pts.t = {std::polar(r, d.uniform(0.0, kTwoPi))};
      for (int mu : {-1, 1}) {
        const ContourPlan plan = build_u_contours(ps, pts.z, pts.t, mu, nodes);
        for (int eps : {-1, 1}) {
          const ScreenSignConfig sc{{eps}, {mu}};
          for (const auto& bits : sector(n, n - 1)) {
            const SpinConfig nu = SpinConfig::zeros(bits);
            const cplx closed = i_residue_closed(nu, sc, pts, ps);
            const IntegralResult quad = integrate(
                plan,
                [&](const std::vector<cplx>& u) {
                  PointConfig at = pts;
                  at.u = u;
                  return ghat(nu, sc, at, ps);
                },
                Measure::DtOverT);
            const double scale = std::max(std::abs(closed), quad.magnitude);
            suite.add({{"n", n}, {"mu", mu}, {"eps", eps}, {"nu", bits_json(bits)}, {"z", cjson(pts.z)},
                       {"t", cjson(pts.t)}, {"closed", cjson(closed)}, {"quadrature", cjson(quad.value)}},
                      std::abs(closed - quad.value) / scale, 1e-8);
          }
        }
      }
    }
  }
  return suite;
}

CheckSuite theorem(const ParameterSet& ps, std::uint64_t seed, int points) {
  CheckSuite suite{"theorem", {}};
  Draw d(seed);
  const std::vector<int> all_minus(ps.l, -1);
  for (int i = 0; i < points; ++i) {
    const PointConfig pts = generic_point(ps, d);
    for (const auto& bits : sector(ps.n, ps.n - ps.l)) {
      const SpinConfig nu = SpinConfig::zeros(bits);
      for (const auto& mu : all_signs(ps.l)) {
        const SignSum s = signsum_g(nu, mu, pts, ps);
        json in{{"nu", bits_json(bits)}, {"mu", mu}, {"z", cjson(pts.z)}, {"t", cjson(pts.t)}};
        if (mu == all_minus) {
          const cplx rhs = theorem_rhs(nu, pts, ps);
          in["part"] = "b";
          suite.add(in, rel_err(s.value, rhs), 1e-9);
        } else {
          in["part"] = "a";
          suite.add(in, s.scale > 0.0 ? std::abs(s.value) / s.scale : std::abs(s.value), 1e-10);
        }
      }
    }
  }
  return suite;
}

CheckSuite assembly(const ParameterSet& ps, std::uint64_t seed, int points) {
  CheckSuite suite{"assembly", {}};
  Draw d(seed);
  for (int i = 0; i < points; ++i) {
    const PointConfig pts = generic_point(ps, d);
    for (const auto& bits : sector(ps.n, ps.n - ps.l)) {
      const SpinConfig nu = SpinConfig::zeros(bits);
      const cplx closed = f_component_closed(nu, pts, ps);
      const cplx assembled = f_component_assembled(nu, pts, ps);
      suite.add({{"nu", bits_json(bits)}, {"z", cjson(pts.z)}, {"t", cjson(pts.t)}}, rel_err(closed, assembled), 1e-9);
    }
  }
  return suite;
}

const char* to_string(PsiForm f) { return f == PsiForm::TV ? "tv" : "tilde"; }

CheckSuite qkz_residuals(const ParameterSet& ps, const std::vector<cplx>& z, int nodes, const std::vector<PsiForm>& forms) {
  CheckSuite suite{"qkz", {}};
  const StructuredW w = solve_default_w(ps);
  for (PsiForm form : forms) {
    const PsiFunction psi = [&](const std::vector<cplx>& zz) {
      return form == PsiForm::TV ? psi_tv(w, ps, zz, nodes) : psi_tilde(w, ps, zz, nodes);
    };
    for (int j = 1; j <= ps.n; ++j) {
      const QKZReport rep = qkz_residual(psi, j, z, ps.kappa, ps, nodes);
      suite.add({{"form", to_string(form)},
                 {"j", j},
                 {"n", ps.n},
                 {"l", ps.l},
                 {"m", ps.m},
                 {"nodes", nodes},
                 {"degenerate", rep.degenerate},
                 {"z", cjson(z)}},
                rep.residual, 1e-6);
    }
  }
  return suite;
}

namespace {

// Direct transcriptions of the operator-product prefactors, with the
// infinite products written out as explicit loops.
cplx poch(cplx z, double x) {
  cplx out{1.0, 0.0};
  double xj = 1.0;
  while (std::abs(xj * z) > 1e-18) {
    out *= 1.0 - xj * z;
    xj *= x;
  }
  return out;
}

cplx poch2(cplx z, double x1, double x2) {
  cplx out{1.0, 0.0};
  for (double xi = 1.0; std::abs(xi * z) > 1e-18; xi *= x1)
    for (double xj = 1.0; std::abs(xi * xj * z) > 1e-18; xj *= x2) out *= 1.0 - xi * xj * z;
  return out;
}

struct Transcription {
  double q, k, s, p;
  double Q(double e) const { return std::pow(q, e); }
  cplx C(cplx z) const { return poch(Q(-2) * z, p) / poch(Q(2) * z, p); }
  cplx xi(cplx z) const {
    const double q4 = Q(4);
    const cplx a = poch2(p / z, p, q4), b = poch2(p * q4 / z, p, q4), c = poch2(p * Q(2) / z, p, q4);
    return a * b / (c * c);
  }
  cplx ss(cplx t1, cplx t2, int e1, int e2) const {
    return std::pow(Q(-2) * t1, 4 * s) * Q(e1) * (t1 - Q(e2 - e1) * t2) / (t1 - Q(-2) * t2) * C(t2 / t1);
  }
  cplx phis(cplx z, cplx t) const { return std::pow(Q(k) * z, -s) * poch(q * t / z, p) / poch(t / (q * z), p); }
  cplx js(cplx u, cplx t, int mu, int e) const {
    return Q(-mu) * (u - Q(-mu * (k + 1) - e) * t) / (u - Q(-mu * (k + 2)) * t);
  }
  cplx phij(cplx z, cplx u, int mu) const { return (z - Q(mu - 2 - k) * u) / (z - Q(-1 - k) * u); }
  cplx jphi(cplx u, cplx z, int mu) const { return Q(mu) * (u - Q(k + 2 - mu) * z) / (u - Q(k + 3) * z); }
  cplx qcomm(cplx z, cplx u, int mu) const {
    return (1.0 - q * q) * u * (z - Q(mu - 2 - k) * u) / ((z - Q(-1 - k) * u) * (u - Q(k + 3) * z));
  }
  cplx jj(cplx u1, cplx u2, int m1, int m2) const {
    return Q(-m1) * (u1 - Q(m1 - m2) * u2) / (u1 - Q(-2) * u2);
  }
  cplx phiphi(cplx z1, cplx z2) const { return std::pow(Q(k) * z1, s) * xi(z1 / z2); }
};

}  // namespace

CheckSuite ope(const ParameterSet& ps, std::uint64_t seed, int identity_points, int line_points) {
  CheckSuite suite{"ope", {}};
  Draw d(seed);
  const Transcription tr{ps.q, ps.k, ps.s, ps.p};

  for (int mu : {-1, 1})
    for (int i = 0; i < identity_points; ++i) {
      const cplx z = d.point(0.5, 2.0);
      const cplx u = d.point(0.5, 2.0);
      const cplx lhs = ope_qcomm_from_pairs(z, u, mu, ps);
      suite.add({{"line", "q-commutator-identity"}, {"mu", mu}, {"z", cjson(z)}, {"u", cjson(u)}},
                rel_err(lhs, ope_prefactor(OpePair::QComm, z, u, 0, mu, ps)), 1e-12);
      suite.add({{"line", "q-commutator-identity-direct"}, {"mu", mu}, {"z", cjson(z)}, {"u", cjson(u)}},
                rel_err(lhs, tr.qcomm(z, u, mu)), 1e-12);
    }

  for (OpePair kind : {OpePair::SS, OpePair::PhiS, OpePair::JS, OpePair::PhiJ, OpePair::JPhi, OpePair::QComm,
                       OpePair::JJ, OpePair::PhiPhi})
    for (int i = 0; i < line_points; ++i) {
      const cplx a = d.point(0.5, 2.0);
      const cplx b = d.point(0.5, 2.0);
      const int s1 = d.sign(), s2 = d.sign();
      cplx direct;
      switch (kind) {
        case OpePair::SS: direct = tr.ss(a, b, s1, s2); break;
        case OpePair::PhiS: direct = tr.phis(a, b); break;
        case OpePair::JS: direct = tr.js(a, b, s1, s2); break;
        case OpePair::PhiJ: direct = tr.phij(a, b, s2); break;
        case OpePair::JPhi: direct = tr.jphi(a, b, s1); break;
        case OpePair::QComm: direct = tr.qcomm(a, b, s2); break;
        case OpePair::JJ: direct = tr.jj(a, b, s1, s2); break;
        case OpePair::PhiPhi: direct = tr.phiphi(a, b); break;
      }
      suite.add({{"line", to_string(kind)}, {"a", cjson(a)}, {"b", cjson(b)}, {"s1", s1}, {"s2", s2}},
                rel_err(ope_prefactor(kind, a, b, s1, s2, ps), direct), 1e-12);
    }
  return suite;
}

CheckSuite elliptic_conditions(const ParameterSet& base, std::uint64_t seed, int n_max, int m_max) {
  CheckSuite suite{"elliptic", {}};
  Draw d(seed);
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l <= n; ++l)
      for (int m = 0; m <= m_max; ++m) {
        const ParameterSet ps = base.with_nlm(n, l, m);
        const StructuredW w = solve_default_w(ps);
        const ConditionReport rep = check_conditions(w, ps);
        bool exact = rep.skeleton_ok && rep.symmetric_ok;
        json failed = json::array();
        for (const auto& c : rep.checks)
          if (c.match != MatchKind::Exact) {
            exact = false;
            failed.push_back(c.variable + ": " + c.multiplier.describe() + " [" + to_string(c.match) + "]");
          }
        suite.add_flag({{"n", n}, {"l", l}, {"m", m}, {"check", "symbolic"}, {"failed", failed}}, exact);

        const PointConfig pts = generic_point(ps, d);
        const cplx base_val = eval_w(w, pts, ps);
        for (int a = 1; a <= l + n; ++a) {
          const bool is_t = a <= l;
          const VarId var{is_t ? VarKind::T : VarKind::Z, is_t ? a : a - l};
          PointConfig shifted = pts;
          (is_t ? shifted.t[var.index - 1] : shifted.z[var.index - 1]) *= ps.p;
          const cplx ratio = eval_w(w, shifted, ps) / base_val;
          const cplx expected = shift_multiplier(w, var).evaluate(pts, ps);
          suite.add({{"n", n},
                     {"l", l},
                     {"m", m},
                     {"check", "numeric"},
                     {"variable", std::string(is_t ? "t" : "z") + std::to_string(var.index)}},
                    rel_err(ratio, expected), 1e-12);
        }
      }
  return suite;
}

}  // namespace qkz::checks
