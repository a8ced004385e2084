#include <gtest/gtest.h>

#include "qkz/ellspace.hpp"
#include "qkz/errors.hpp"
#include "qkz/qkzcheck.hpp"

using namespace qkz;

namespace {
const std::vector<cplx> kZ2{std::polar(1.0, 0.4), std::polar(1.0, 2.9)};
}

TEST(Psi, NoScreeningIsW) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 0, 1);
  const StructuredW w = solve_default_w(ps);
  const PsiResult r = psi_tv(w, ps, kZ2, 64);
  EXPECT_EQ(r.psi.at({0, 0}), eval_w(w, PointConfig{kZ2, {}, {}}, ps));
  EXPECT_EQ(r.psi.at({1, 0}), cplx(0.0));
}

TEST(Psi, DimensionMismatch) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 1);
  EXPECT_THROW(psi_tv(solve_default_w(ps.with_nlm(2, 2, 0)), ps, kZ2, 64), DomainError);
}

TEST(Rhs, SingleSiteIsKappa) {
  const auto ps = ParameterSet::make(0.6, 1.0, 1, 1);
  SpinVector v(1);
  v[0] = 2.0;
  v[1] = 3.0;
  const SpinVector out = qkz_rhs(v, {1.0}, 1, 0.5, ps);
  EXPECT_EQ(out[0], cplx(2.0));
  EXPECT_EQ(out[1], cplx(1.5));
}

TEST(Rhs, OperatorOrder) {
  const auto ps = ParameterSet::make(0.6, 1.0, 3, 1);
  const std::vector<cplx> z{1.0, std::polar(1.0, 1.5), std::polar(1.0, -2.0)};
  const cplx kappa = ps.kappa;
  SpinVector v = SpinVector::basis({0, 1, 0}) + 0.5 * SpinVector::basis({1, 0, 0}) + SpinVector::basis({0, 0, 1});
  // j = 2: R_{21}(p z2/z1) kappa_2 R_{23}(z2/z3)
  SpinVector want = r_apply(z[1] / z[2], 2, 3, v, ps);
  want = kappa_apply(kappa, 2, want);
  want = r_apply(ps.p * z[1] / z[0], 2, 1, want, ps);
  EXPECT_LT((qkz_rhs(v, z, 2, kappa, ps) - want).sup_norm(), 1e-15);
}

TEST(Residual, ConstantSingleSite) {
  const auto ps = ParameterSet::make(0.6, 1.0, 1, 0);
  const PsiFunction psi = [](const std::vector<cplx>&) { return PsiResult{SpinVector::basis({0}), 1.0}; };
  const QKZReport rep = qkz_residual(psi, 1, {1.0}, 1.0, ps);
  EXPECT_EQ(rep.residual, 0.0);
  EXPECT_FALSE(rep.degenerate);
}

TEST(Residual, TwoSitesOneScreening) {
  for (int m : {0, 1}) {
    const auto ps = ParameterSet::make(0.6, 1.0, 2, 1, m);
    const StructuredW w = solve_default_w(ps);
    const PsiFunction tv = [&](const std::vector<cplx>& z) { return psi_tv(w, ps, z, 128); };
    const PsiFunction tl = [&](const std::vector<cplx>& z) { return psi_tilde(w, ps, z, 128); };
    for (int j = 1; j <= 2; ++j) {
      EXPECT_LT(qkz_residual(tv, j, kZ2, ps.kappa, ps).residual, 1e-6) << m << j;
      EXPECT_LT(qkz_residual(tl, j, kZ2, ps.kappa, ps).residual, 1e-6) << m << j;
    }
  }
}

// same vector up to a scalar; the modulus is the closed-form constant, the phase comes from principal branches
TEST(Tilde, ProportionalToTv) {
  for (int m : {0, 1}) {
    const auto ps = ParameterSet::make(0.6, 1.0, 2, 1, m);
    const StructuredW w = solve_default_w(ps);
    const SpinVector a = psi_tv(w, ps, kZ2, 128).psi;
    const SpinVector b = psi_tilde(w, ps, kZ2, 128).psi;
    const cplx ratio = b.at({0, 1}) / a.at({0, 1});
    EXPECT_LT((b - ratio * a).sup_norm(), 1e-10 * b.sup_norm());
    EXPECT_NEAR(std::abs(ratio), std::abs(tilde_constant(ps)), 1e-10 * std::abs(ratio));
  }
}

TEST(Tilde, ExponentAudit) {
  const auto ps = ParameterSet::make(0.6, 1.0, 3, 1, 2);
  const ExponentAudit a = transform_exponent_audit(ps);
  EXPECT_FALSE(a.consistent());
  const auto d = a.difference();
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(d[i - 1], Rational(3, 2) - Rational(i)) << i;
  EXPECT_TRUE(transform_exponent_audit(ps.with_nlm(2, 1, 0)).difference()[0] == Rational(0));
}

TEST(Tilde, DisplayMatchesTransformedClosedForm) {
  const auto ps = ParameterSet::make(0.6, 1.0, 3, 2, 1);
  const PointConfig pts{{1.0, std::polar(1.0, 2.0), std::polar(1.0, -2.1)},
                        {std::polar(0.8, 0.3), std::polar(1.1, -1.0)}, {}};
  const SpinVector a = f_tilde_display(pts, ps), b = f_tilde_from_closed(pts, ps);
  EXPECT_LT((a - b).sup_norm(), 1e-10 * a.sup_norm());
}

TEST(Psi, Homogeneous) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 2);
  const StructuredW w = solve_default_w(ps);
  const double lambda = 1.3;
  double degree = 0.0;
  for (const auto& e : w.power_z) degree += e.value(ps);
  const SpinVector a = psi_tv(w, ps, kZ2, 64).psi;
  const SpinVector b = psi_tv(w, ps, {lambda * kZ2[0], lambda * kZ2[1]}, 64).psi;
  EXPECT_LT((b - std::pow(lambda, degree) * a).sup_norm(), 1e-9 * b.sup_norm());
}
