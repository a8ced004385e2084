#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "qkz/params.hpp"
#include "qkz/tvweights.hpp"

namespace qkz {

using Rational = boost::rational<long long>;

// coeff * q^qexp * p^pexp, kept symbolic so shift identities compare exactly.
struct QScalar {
  cplx coeff{1.0, 0.0};
  Rational qexp{0};
  Rational pexp{0};

  static QScalar q_power(Rational e) { return QScalar{{1.0, 0.0}, e, Rational(0)}; }
  cplx value(const ParameterSet& ps) const;
  QScalar inverse() const;
  QScalar pow(long long e) const;
  bool operator==(const QScalar& o) const = default;
};
QScalar operator*(const QScalar& a, const QScalar& b);

// Real exponent plain + s_coeff * s. Under x -> p x the factor x^e picks up
// p^plain * q^s_coeff because p^s = q.
struct SExp {
  Rational plain{0};
  Rational s_coeff{0};
  double value(const ParameterSet& ps) const;
  bool is_zero() const { return plain == Rational(0) && s_coeff == Rational(0); }
  bool operator==(const SExp& o) const = default;
};

// theta(constant * prod t_a^{t_exp[a]} prod z_j^{z_exp[j]}), in the numerator or the denominator.
struct ThetaAtom {
  QScalar constant;
  std::vector<int> t_exp;
  std::vector<int> z_exp;
  bool numerator = true;
  bool operator==(const ThetaAtom& o) const = default;
};

struct StructuredW {
  int n = 0;
  int l = 0;
  QScalar constant;
  std::vector<SExp> power_t;
  std::vector<SExp> power_z;
  std::vector<ThetaAtom> atoms;
};

enum class VarKind { T, Z };
struct VarId {
  VarKind kind;
  int index;  // 1-based
};

// Result of shifting one variable by p: scalar times a leftover monomial.
struct Multiplier {
  QScalar scalar;
  std::vector<int> t_mono;
  std::vector<int> z_mono;
  bool is_constant() const;
  cplx evaluate(const PointConfig& pts, const ParameterSet& ps) const;
  std::string describe() const;
};

enum class MatchKind { Exact, Numeric, Mismatch, NotConstant };
MatchKind compare_multiplier(const Multiplier& m, const QScalar& target, const ParameterSet& ps, double tol = 1e-12);
const char* to_string(MatchKind k);

Multiplier shift_multiplier(const StructuredW& w, VarId var);

// Denominator theta(q t_a/z_j) for all a,j and theta(t_a/t_b)/theta(q^-2 t_a/t_b) for a<b.
std::vector<ThetaAtom> skeleton_atoms(int n, int l);
StructuredW skeleton_w(int n, int l);

// Default element: Theta = prod theta(q^{g_j} t_a/z_j), Y = prod z_j^{-l s g_j},
// g_j = -(2l-2-n-2m)/n + spread (j - (n+1)/2). spread = 0 gives g_j = log_q kappa^{-1/n}.
StructuredW solve_default_w(const ParameterSet& ps, Rational spread = Rational(1, 2));

// Multiplies in prod z_i^{-s(m+n-2l-i)} prod t_a^{-2s(2a-2-m)}.
StructuredW tilde_w(const StructuredW& w, const ParameterSet& ps);

cplx eval_w(const StructuredW& w, const PointConfig& pts, const ParameterSet& ps);

struct ConditionCheck {
  std::string variable;
  Multiplier multiplier;
  QScalar target;
  MatchKind match = MatchKind::Mismatch;
};

struct ConditionReport {
  bool skeleton_ok = false;
  bool symmetric_ok = false;
  std::vector<ConditionCheck> checks;
  bool ok() const;
};

// Structure checks plus T^t_a W/W = kappa q^{n-2l+4a-2}, T^z_j W/W = q^{-l}.
ConditionReport check_conditions(const StructuredW& w, const ParameterSet& ps);
// T^t_a W/W = 1, T^z_j W/W = q^{l-m-n+j}.
ConditionReport check_tilde_conditions(const StructuredW& wt, const ParameterSet& ps);

std::string to_json_string(const StructuredW& w);
StructuredW from_json_string(const std::string& text);

}  // namespace qkz
