#include "qkz/ellspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qkz/errors.hpp"
#include "qkz/qseries.hpp"

namespace qkz {
namespace {

double as_double(const Rational& r) { return boost::rational_cast<double>(r); }

cplx integer_pow(cplx c, long long e) {
  cplx out{1.0, 0.0};
  cplx base = e < 0 ? 1.0 / c : c;
  for (long long i = 0, n = e < 0 ? -e : e; i < n; ++i) out *= base;
  return out;
}

cplx monomial(const std::vector<int>& te, const std::vector<int>& ze, const PointConfig& pts) {
  cplx out{1.0, 0.0};
  for (std::size_t a = 0; a < te.size(); ++a)
    if (te[a]) out *= integer_pow(pts.t.at(a), te[a]);
  for (std::size_t j = 0; j < ze.size(); ++j)
    if (ze[j]) out *= integer_pow(pts.z.at(j), ze[j]);
  return out;
}

// theta argument within 1e-12 (relative) of an integer power of p
bool near_theta_zero(cplx x, double p) {
  const double lx = std::log(std::abs(x)) / std::log(p);
  const long long j0 = std::llround(lx);
  for (long long j = j0 - 1; j <= j0 + 1; ++j) {
    const double pj = std::pow(p, static_cast<double>(j));
    if (std::abs(x - pj) < 1e-12 * pj) return true;
  }
  return false;
}

}  // namespace

cplx QScalar::value(const ParameterSet& ps) const {
  return coeff * std::pow(ps.q, as_double(qexp)) * std::pow(ps.p, as_double(pexp));
}

QScalar QScalar::inverse() const { return QScalar{1.0 / coeff, -qexp, -pexp}; }

QScalar QScalar::pow(long long e) const {
  return QScalar{integer_pow(coeff, e), qexp * Rational(e), pexp * Rational(e)};
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  return QScalar{a.coeff * b.coeff, a.qexp + b.qexp, a.pexp + b.pexp};
}

double SExp::value(const ParameterSet& ps) const { return as_double(plain) + as_double(s_coeff) * ps.s; }

bool Multiplier::is_constant() const {
  return std::all_of(t_mono.begin(), t_mono.end(), [](int e) { return e == 0; }) &&
         std::all_of(z_mono.begin(), z_mono.end(), [](int e) { return e == 0; });
}

cplx Multiplier::evaluate(const PointConfig& pts, const ParameterSet& ps) const {
  return scalar.value(ps) * monomial(t_mono, z_mono, pts);
}

std::string Multiplier::describe() const {
  std::ostringstream os;
  os << "(" << scalar.coeff.real() << (scalar.coeff.imag() < 0 ? "" : "+") << scalar.coeff.imag() << "i)"
     << " q^(" << scalar.qexp << ") p^(" << scalar.pexp << ")";
  for (std::size_t a = 0; a < t_mono.size(); ++a)
    if (t_mono[a]) os << " t" << a + 1 << "^" << t_mono[a];
  for (std::size_t j = 0; j < z_mono.size(); ++j)
    if (z_mono[j]) os << " z" << j + 1 << "^" << z_mono[j];
  return os.str();
}

const char* to_string(MatchKind k) {
  switch (k) {
    case MatchKind::Exact: return "exact";
    case MatchKind::Numeric: return "numeric";
    case MatchKind::Mismatch: return "mismatch";
    case MatchKind::NotConstant: return "not-constant";
  }
  return "?";
}

MatchKind compare_multiplier(const Multiplier& m, const QScalar& target, const ParameterSet& ps, double tol) {
  if (!m.is_constant()) return MatchKind::NotConstant;
  if (m.scalar == target) return MatchKind::Exact;
  const cplx a = m.scalar.value(ps), b = target.value(ps);
  if (std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b))) return MatchKind::Numeric;
  return MatchKind::Mismatch;
}

Multiplier shift_multiplier(const StructuredW& w, VarId var) {
  const std::size_t nidx = static_cast<std::size_t>(var.index - 1);
  const bool is_t = var.kind == VarKind::T;
  if (var.index < 1 || (is_t && var.index > w.l) || (!is_t && var.index > w.n))
    throw DomainError("shift_multiplier: variable index out of range");
  Multiplier out;
  out.t_mono.assign(w.l, 0);
  out.z_mono.assign(w.n, 0);

  const SExp& pw = is_t ? w.power_t.at(nidx) : w.power_z.at(nidx);
  out.scalar = out.scalar * QScalar{{1.0, 0.0}, pw.s_coeff, pw.plain};

  for (const ThetaAtom& atom : w.atoms) {
    const long long e = is_t ? atom.t_exp.at(nidx) : atom.z_exp.at(nidx);
    if (e == 0) continue;
    // theta(p^e X) = (-1)^e p^{-e(e-1)/2} X^{-e} theta(X)
    QScalar f{(e % 2) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0}, Rational(0), Rational(-e * (e - 1), 2)};
    f = f * atom.constant.pow(-e);
    const int sign = atom.numerator ? 1 : -1;
    if (!atom.numerator) f = f.inverse();
    out.scalar = out.scalar * f;
    for (int a = 0; a < w.l; ++a) out.t_mono[a] += sign * static_cast<int>(-e) * atom.t_exp[a];
    for (int j = 0; j < w.n; ++j) out.z_mono[j] += sign * static_cast<int>(-e) * atom.z_exp[j];
  }
  return out;
}

std::vector<ThetaAtom> skeleton_atoms(int n, int l) {
  std::vector<ThetaAtom> atoms;
  for (int a = 0; a < l; ++a)
    for (int j = 0; j < n; ++j) {
      ThetaAtom at{QScalar::q_power(1), std::vector<int>(l, 0), std::vector<int>(n, 0), false};
      at.t_exp[a] = 1;
      at.z_exp[j] = -1;
      atoms.push_back(at);
    }
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) {
      ThetaAtom num{QScalar::q_power(0), std::vector<int>(l, 0), std::vector<int>(n, 0), true};
      num.t_exp[a] = 1;
      num.t_exp[b] = -1;
      ThetaAtom den = num;
      den.constant = QScalar::q_power(-2);
      den.numerator = false;
      atoms.push_back(num);
      atoms.push_back(den);
    }
  return atoms;
}

StructuredW skeleton_w(int n, int l) {
  StructuredW w;
  w.n = n;
  w.l = l;
  w.power_t.assign(l, SExp{});
  w.power_z.assign(n, SExp{});
  w.atoms = skeleton_atoms(n, l);
  return w;
}

StructuredW solve_default_w(const ParameterSet& ps, Rational spread) {
  const int n = ps.n, l = ps.l, m = ps.m;
  StructuredW w = skeleton_w(n, l);
  if (l == 0) return w;
  const Rational base(-(2LL * l - 2 - n - 2LL * m), n);
  std::vector<ThetaAtom> theta_part;
  for (int j = 1; j <= n; ++j) {
    const Rational g = base + spread * Rational(2LL * j - n - 1, 2);
    w.power_z[j - 1] = SExp{Rational(0), -Rational(l) * g};
    for (int a = 0; a < l; ++a) {
      ThetaAtom at{QScalar::q_power(g), std::vector<int>(l, 0), std::vector<int>(n, 0), true};
      at.t_exp[a] = 1;
      at.z_exp[j - 1] = -1;
      theta_part.push_back(at);
    }
  }
  w.atoms.insert(w.atoms.begin(), theta_part.begin(), theta_part.end());
  return w;
}

StructuredW tilde_w(const StructuredW& w, const ParameterSet& ps) {
  StructuredW out = w;
  for (int i = 1; i <= w.n; ++i) out.power_z[i - 1].s_coeff -= Rational(ps.m + ps.n - 2 * ps.l - i);
  for (int a = 1; a <= w.l; ++a) out.power_t[a - 1].s_coeff -= Rational(2 * (2 * a - 2 - ps.m));
  return out;
}

cplx eval_w(const StructuredW& w, const PointConfig& pts, const ParameterSet& ps) {
  if (static_cast<int>(pts.t.size()) != w.l || static_cast<int>(pts.z.size()) != w.n)
    throw DomainError("eval_w: point dimensions do not match W");
  cplx out = w.constant.value(ps);
  for (int a = 0; a < w.l; ++a)
    if (!w.power_t[a].is_zero()) out *= std::pow(pts.t[a], w.power_t[a].value(ps));
  for (int j = 0; j < w.n; ++j)
    if (!w.power_z[j].is_zero()) out *= std::pow(pts.z[j], w.power_z[j].value(ps));
  for (const ThetaAtom& atom : w.atoms) {
    const cplx x = atom.constant.value(ps) * monomial(atom.t_exp, atom.z_exp, pts);
    if (atom.numerator) {
      out *= theta(x, ps);
    } else {
      if (near_theta_zero(x, ps.p)) throw PoleError("eval_w: theta denominator vanishes");
      out /= theta(x, ps);
    }
  }
  return out;
}

bool ConditionReport::ok() const {
  return skeleton_ok && symmetric_ok &&
         std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) {
           return c.match == MatchKind::Exact || c.match == MatchKind::Numeric;
         });
}

namespace {

bool has_skeleton(const StructuredW& w) {
  std::vector<ThetaAtom> pool = w.atoms;
  for (const ThetaAtom& s : skeleton_atoms(w.n, w.l)) {
    auto it = std::find(pool.begin(), pool.end(), s);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

// Atoms beyond the skeleton, as a multiset, must be stable under every transposition of t.
bool theta_part_symmetric(const StructuredW& w) {
  std::vector<ThetaAtom> rest = w.atoms;
  for (const ThetaAtom& s : skeleton_atoms(w.n, w.l)) {
    auto it = std::find(rest.begin(), rest.end(), s);
    if (it != rest.end()) rest.erase(it);
  }
  for (int a = 1; a < w.l; ++a) {
    if (!(w.power_t[a] == w.power_t[0])) return false;
  }
  for (int a = 0; a < w.l; ++a)
    for (int b = a + 1; b < w.l; ++b) {
      std::vector<ThetaAtom> pool = rest;
      for (ThetaAtom at : rest) {
        std::swap(at.t_exp[a], at.t_exp[b]);
        auto it = std::find(pool.begin(), pool.end(), at);
        if (it == pool.end()) return false;
        pool.erase(it);
      }
    }
  return true;
}

ConditionReport run_checks(const StructuredW& w, const ParameterSet& ps, bool tilde) {
  ConditionReport rep;
  rep.skeleton_ok = has_skeleton(w);
  rep.symmetric_ok = tilde ? true : theta_part_symmetric(w);
  const long long n = ps.n, l = ps.l, m = ps.m;
  for (int a = 1; a <= w.l; ++a) {
    ConditionCheck c;
    c.variable = "t" + std::to_string(a);
    c.multiplier = shift_multiplier(w, {VarKind::T, a});
    // kappa q^{n-2l+4a-2} with kappa = q^{2l-2-n-2m}
    c.target = tilde ? QScalar::q_power(0) : QScalar::q_power(Rational(4LL * a - 4 - 2 * m));
    c.match = compare_multiplier(c.multiplier, c.target, ps);
    rep.checks.push_back(c);
  }
  for (int j = 1; j <= w.n; ++j) {
    ConditionCheck c;
    c.variable = "z" + std::to_string(j);
    c.multiplier = shift_multiplier(w, {VarKind::Z, j});
    c.target = tilde ? QScalar::q_power(Rational(l - m - n + j)) : QScalar::q_power(Rational(-l));
    c.match = compare_multiplier(c.multiplier, c.target, ps);
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace

ConditionReport check_conditions(const StructuredW& w, const ParameterSet& ps) { return run_checks(w, ps, false); }

ConditionReport check_tilde_conditions(const StructuredW& wt, const ParameterSet& ps) {
  return run_checks(wt, ps, true);
}

}  // namespace qkz
