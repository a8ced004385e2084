#include <gtest/gtest.h>

#include <random>

#include "qkz/errors.hpp"
#include "qkz/params.hpp"
#include "qkz/qseries.hpp"
#include "qkz/spinchain.hpp"

using namespace qkz;

namespace {

SpinVector random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SpinVector v(n);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {u(g), u(g)};
  return v;
}

double dist(const SpinVector& a, const SpinVector& b) { return (a - b).sup_norm(); }

// swap legs i and j by relabeling basis indices
SpinVector permute(const SpinVector& v, int i, int j) {
  SpinVector out(v.n());
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    auto b = SpinVector::bits_of(idx, v.n());
    std::swap(b[i - 1], b[j - 1]);
    out.at(b) = v[idx];
  }
  return out;
}

}  // namespace

TEST(SpinVector, Indexing) {
  EXPECT_EQ(SpinVector(3).size(), 8u);
  EXPECT_EQ(SpinVector::index_of({1, 0}), 2u);
  EXPECT_EQ(SpinVector::bits_of(5, 3), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(sector(4, 2).size(), 6u);
}

TEST(RMatrix, PermutationAtOne) {
  const auto ps = ParameterSet::make(0.6, 1.0, 3);
  const SpinVector v = random_vector(3, 11);
  EXPECT_LT(dist(r_apply(1.0, 1, 3, v, ps), permute(v, 1, 3)), 1e-15);
}

TEST(RMatrix, EqualSpinsFixed) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2);
  const auto v = SpinVector::basis({0, 0});
  EXPECT_LT(dist(r_apply(cplx(0.3, 1.7), 1, 2, v, ps), v), 1e-15);
}

TEST(RMatrix, HandValue) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2);
  const SpinVector out = r_apply(0.25, 1, 2, SpinVector::basis({0, 1}), ps);
  EXPECT_NEAR(std::abs(out.at({0, 1}) - 0.75 / 0.91 * 0.6), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out.at({1, 0}) - 0.64 / 0.91), 0.0, 1e-15);
  EXPECT_EQ(out.at({0, 0}), cplx(0.0));
  EXPECT_EQ(out.at({1, 1}), cplx(0.0));
}

TEST(RMatrix, PoleReported) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2);
  EXPECT_THROW(r_apply(1.0 / 0.36, 1, 2, SpinVector::basis({0, 1}), ps), PoleError);
}

TEST(RMatrix, YangBaxter) {
  const auto ps = ParameterSet::make(0.6, 1.0, 3);
  const SpinVector v = random_vector(3, 5);
  const cplx z = std::polar(0.8, 0.4), w = std::polar(1.3, -1.1);
  const SpinVector lhs = r_apply(z, 1, 2, r_apply(z * w, 1, 3, r_apply(w, 2, 3, v, ps), ps), ps);
  const SpinVector rhs = r_apply(w, 2, 3, r_apply(z * w, 1, 3, r_apply(z, 1, 2, v, ps), ps), ps);
  EXPECT_LT(dist(lhs, rhs), 1e-13);
}

TEST(RHat, FlipConjugatedComposition) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2);
  const cplx z = std::polar(0.5, 0.1);
  const SpinVector v = SpinVector::basis({1, 0});
  const SpinVector want = rho(z, ps) * flip_all(r_apply(z, 1, 2, flip_all(v), ps));
  EXPECT_LT(dist(rhat_apply(z, 1, 2, v, ps), want), 1e-15);
}

TEST(Kappa, Definition) {
  SpinVector v = SpinVector::basis({0, 1}) + SpinVector::basis({1, 0});
  const SpinVector out = kappa_apply(0.3, 2, v);
  EXPECT_EQ(out.at({0, 1}), cplx(0.3));
  EXPECT_EQ(out.at({1, 0}), cplx(1.0));
  EXPECT_LT(dist(kappa_apply(1.0, 1, v), v), 0.0 + 1e-300);
  EXPECT_THROW(kappa_apply(1.0, 3, v), DomainError);
}

TEST(Flip, SwapsBits) {
  const SpinVector out = flip_all(SpinVector::basis({0, 1}));
  EXPECT_EQ(out.at({1, 0}), cplx(1.0));
  EXPECT_EQ(out.sup_norm(), 1.0);
}
