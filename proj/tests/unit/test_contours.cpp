#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qkz/contours.hpp"
#include "qkz/ellspace.hpp"
#include "qkz/errors.hpp"
#include "qkz/qkzcheck.hpp"

using namespace qkz;

namespace {
const std::vector<cplx> kZ2{std::polar(1.0, 0.4), std::polar(1.0, 2.9)};
}

TEST(TPlan, RadiusAndCorrections) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 1);
  const ContourPlan plan = build_t_contours(ps, kZ2, 256);
  ASSERT_EQ(plan.vars(), 1);
  EXPECT_NEAR(plan.radii[0], std::sqrt(std::pow(0.6, 5) * 0.6), 1e-12);
  EXPECT_NEAR(plan.radii[0], 0.216, 1e-3);
  ASSERT_EQ(plan.corrections.size(), 2u);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_LT(std::abs(plan.corrections[j].pole - kZ2[j] / 0.6), 1e-15);
    EXPECT_EQ(plan.corrections[j].orientation, 1);
  }
}

TEST(TPlan, EmptyForNoScreening) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 0);
  const ContourPlan plan = build_t_contours(ps, kZ2, 256);
  EXPECT_EQ(plan.vars(), 0);
  EXPECT_TRUE(plan.corrections.empty());
}

TEST(TPlan, Rejections) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 1);
  EXPECT_THROW(build_t_contours(ps, kZ2, 4), DomainError);
  EXPECT_THROW(build_t_contours(ps, {1.0}, 256), DomainError);
  EXPECT_THROW(build_t_contours(ps, {1.0, 0.0}, 256), DomainError);
}

TEST(TPlan, PoleSeparation) {
  const auto ps = ParameterSet::make(0.6, 1.0, 3, 1);
  const std::vector<cplx> z{1.0, std::polar(1.0, 0.3), std::polar(1.0, 0.6)};
  const ContourPlan plan = build_t_contours(ps, z, 256);
  for (const auto& c : plan.corrections) {
    for (const auto* set : {&plan.inside, &plan.outside})
      for (const cplx& y : *set)
        if (std::abs(y - c.pole) > 1e-14) EXPECT_GE(std::abs(y - c.pole), 2.0 * c.radius);
    EXPECT_GT(std::abs(std::abs(c.pole) - plan.radii[c.var]), c.radius);
  }
}

TEST(UPlan, Radius) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 1);
  const ContourPlan plan = build_u_contours(ps, kZ2, {std::polar(0.216, 1.0)}, -1, 256);
  EXPECT_NEAR(plan.radii[0], std::pow(0.6, 3), 1e-12);
  EXPECT_TRUE(plan.corrections.empty());
  EXPECT_THROW(build_u_contours(ps, kZ2, {0.2, 0.3}, -1, 256), DomainError);
}

TEST(Integrate, UnitResidueAtOrigin) {
  ContourPlan plan;
  plan.radii = {0.3};
  plan.nodes = 64;
  const auto r = integrate(plan, [](const std::vector<cplx>&) { return cplx(1.0); });
  EXPECT_LT(std::abs(r.value - 1.0), 1e-15);
}

TEST(Integrate, CorrectionCircleCarriesResidue) {
  const auto ps = ParameterSet::make(0.6, 1.0, 1, 1);
  const cplx z = std::polar(1.0, 0.8), pole = z / 0.6;
  const ContourPlan plan = build_t_contours(ps, {z}, 256);
  const auto r = integrate(plan, [&](const std::vector<cplx>& t) { return 1.0 / (t[0] - pole); }, Measure::Dt);
  EXPECT_LT(std::abs(r.value - 1.0), 1e-13);
}

TEST(Integrate, NonFiniteAborts) {
  ContourPlan plan;
  plan.radii = {0.3};
  plan.nodes = 16;
  EXPECT_THROW(integrate(plan, [](const std::vector<cplx>&) { return cplx(std::numeric_limits<double>::quiet_NaN()); }),
               NonFiniteSample);
}

TEST(Integrate, NoVariables) {
  const auto r = integrate(ContourPlan{}, [](const std::vector<cplx>& t) { return cplx(2.0 + t.size()); });
  EXPECT_EQ(r.value, cplx(2.0));
}

namespace {
SpinVector psi_with_radius(const ParameterSet& ps, double r, int nodes) {
  const StructuredW w = solve_default_w(ps);
  const ContourPlan plan = with_base_radius(build_t_contours(ps, kZ2, nodes), r);
  SpinVector out(ps.n);
  for (const auto& bits : sector(ps.n, ps.l)) {
    const SpinConfig eps = SpinConfig::ones(bits);
    out.at(bits) = integrate(plan, [&](const std::vector<cplx>& t) {
                     const PointConfig pts{kZ2, t, {}};
                     return phase_phi(pts, ps) * weight_w(eps, pts, ps) * eval_w(w, pts, ps);
                   }).value;
  }
  return out;
}
}  // namespace

TEST(Integrate, RadiusIndependence) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 1);
  const SpinVector base = psi_with_radius(ps, 0.216, 256);
  for (double f : {0.9, 1.1}) {
    const SpinVector moved = psi_with_radius(ps, 0.216 * f, 256);
    EXPECT_LT((moved - base).sup_norm(), 1e-10 * base.sup_norm()) << f;
  }
}

TEST(Integrate, NodeRefinement) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 1);
  const SpinVector a = psi_tv(solve_default_w(ps), ps, kZ2, 256).psi;
  const SpinVector b = psi_tv(solve_default_w(ps), ps, kZ2, 512).psi;
  EXPECT_LT((a - b).sup_norm(), 1e-10 * b.sup_norm());
}
