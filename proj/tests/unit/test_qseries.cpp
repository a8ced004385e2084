#include <gtest/gtest.h>

#include <cmath>

#include "qkz/errors.hpp"
#include "qkz/params.hpp"
#include "qkz/qseries.hpp"

using namespace qkz;

namespace {

cplx direct(cplx z, cplx x, int terms) {
  cplx r{1.0, 0.0}, xj{1.0, 0.0};
  for (int j = 0; j < terms; ++j, xj *= x) r *= 1.0 - xj * z;
  return r;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(QPoch, TrivialValues) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  EXPECT_EQ(qpoch(0.0, ps.p), cplx(1.0));
  EXPECT_EQ(qpoch(1.0, ps.p), cplx(0.0));
}

TEST(QPoch, DirectProduct) { EXPECT_LT(rel(qpoch(0.5, 0.3), direct(0.5, 0.3, 200)), 1e-14); }

TEST(QPoch, ComplexArguments) {
  const cplx z{0.7, -1.3}, x = std::polar(0.45, 0.8);
  EXPECT_LT(rel(qpoch(z, x), direct(z, x, 200)), 1e-14);
}

TEST(QPoch, TighterTruncationAgrees) {
  const cplx z{1.9, 0.4};
  EXPECT_LT(rel(qpoch(z, 0.8, 1e-16), qpoch(z, 0.8, 1e-30)), 1e-14);
}

TEST(QPoch, RejectsDivergent) {
  EXPECT_THROW(qpoch(0.5, 1.0), DomainError);
  EXPECT_THROW(qpoch2(0.5, 0.2, cplx(0.0, 1.1)), DomainError);
}

TEST(QPoch2, TrivialValues) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  const double q4 = std::pow(0.6, 4);
  EXPECT_EQ(qpoch2(0.0, ps.p, q4), cplx(1.0));
  EXPECT_EQ(qpoch2(1.0, ps.p, q4), cplx(0.0));
}

TEST(QPoch2, DirectDoubleProduct) {
  cplx want{1.0, 0.0};
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) want *= 1.0 - std::pow(0.1, i) * std::pow(0.2, j) * 0.2;
  EXPECT_LT(rel(qpoch2(0.2, 0.1, 0.2), want), 1e-14);
}

TEST(Theta, Zeros) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  EXPECT_EQ(theta(1.0, ps), cplx(0.0));
  EXPECT_EQ(theta(ps.p, ps), cplx(0.0));
  EXPECT_THROW(theta(0.0, ps), DomainError);
}

TEST(Theta, QuasiPeriodicity) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  const cplx z{0.5, 0.1};
  EXPECT_LT(rel(theta(ps.p * z, ps), -theta(z, ps) / z), 1e-13);
  EXPECT_LT(rel(theta(1.0 / z, ps), -theta(z, ps) / z), 1e-13);
}

TEST(Xi, DirectTripleProduct) {
  const auto ps = ParameterSet::make(0.5, 0.5);
  const cplx z = std::polar(1.0, 0.7);
  const double q = ps.q, p = ps.p, q4 = std::pow(q, 4);
  auto dp = [&](cplx a) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < 200; ++i)
      for (int j = 0; j < 200; ++j) r *= 1.0 - std::pow(p, i) * std::pow(q4, j) * a;
    return r;
  };
  const cplx w = p / z, d = dp(w * q * q);
  const cplx want = dp(w) * dp(w * q4) / (d * d);
  EXPECT_LT(rel(xi(z, ps), want), 1e-13);
}

TEST(Xi, ShiftRelation) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  const cplx z = std::polar(1.0, 0.3);
  EXPECT_LT(rel(xi(ps.p * z, ps) / xi(z, ps), xi_shift_target(z, ps)), 1e-12);
}

TEST(Rho, PoleAtQSquared) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  EXPECT_GT(std::abs(rho(0.36 * (1.0 + 1e-6), ps)), 1e5);
}

TEST(Rho, DirectProducts) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  const cplx z = std::polar(1.0, 0.2);
  const double q = ps.q, q4 = std::pow(q, 4);
  const cplx d = direct(q * q / z, q4, 200);
  const cplx want = std::sqrt(q) * direct(1.0 / z, q4, 200) * direct(q4 / z, q4, 200) / (d * d);
  EXPECT_LT(rel(rho(z, ps), want), 1e-13);
}

TEST(CFun, ValueAtZeroAndPole) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  EXPECT_LT(std::abs(cfun(0.0, ps) - 1.0), 1e-15);
  EXPECT_THROW(cfun(1.0 / (0.6 * 0.6), ps), PoleError);
}

TEST(CFun, DirectProducts) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  const cplx z = std::polar(0.3, 0.4);
  const double q = ps.q;
  const cplx want = direct(z / (q * q), ps.p, 200) / direct(q * q * z, ps.p, 200);
  EXPECT_LT(rel(cfun(z, ps), want), 1e-13);
}
