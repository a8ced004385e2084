#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qkz/params.hpp"

namespace qkz {

// Dense vector in (C^2)^{(x)n}. Component (b_1,...,b_n) sits at index sum b_i 2^{n-i}.
class SpinVector {
 public:
  SpinVector() = default;
  explicit SpinVector(int n);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  cplx& operator[](std::size_t idx) { return coeffs_[idx]; }
  const cplx& operator[](std::size_t idx) const { return coeffs_[idx]; }
  cplx& at(const std::vector<int>& bits) { return coeffs_.at(index_of(bits)); }
  const cplx& at(const std::vector<int>& bits) const { return coeffs_.at(index_of(bits)); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  static SpinVector basis(const std::vector<int>& bits);
  static std::size_t index_of(const std::vector<int>& bits);
  // leg is 1-based
  static int bit(std::size_t idx, int leg, int n) { return static_cast<int>((idx >> (n - leg)) & 1u); }
  static std::vector<int> bits_of(std::size_t idx, int n);

  double sup_norm() const;
  int ones_in_support_max() const;

  SpinVector& operator+=(const SpinVector& o);
  SpinVector& operator-=(const SpinVector& o);
  SpinVector& operator*=(cplx c);

 private:
  int n_ = 0;
  std::vector<cplx> coeffs_;
};

SpinVector operator+(SpinVector a, const SpinVector& b);
SpinVector operator-(SpinVector a, const SpinVector& b);
SpinVector operator*(cplx c, SpinVector v);

// A component label with its sorted support. Which bit value forms the
// support depends on the caller: value 1 for weight functions, value 0 for
// free-field components.
struct SpinConfig {
  int n = 0;
  std::vector<int> bits;
  std::vector<int> support;  // 1-based, strictly increasing

  static SpinConfig with_support_on(const std::vector<int>& bits, int value);
  static SpinConfig ones(const std::vector<int>& bits) { return with_support_on(bits, 1); }
  static SpinConfig zeros(const std::vector<int>& bits) { return with_support_on(bits, 0); }
  int count() const { return static_cast<int>(support.size()); }
  SpinConfig flipped() const;  // bits 1-b, support recomputed with the same value convention
  int support_value = 1;
};

// All bit vectors of length n with exactly `ones` ones, ascending by index.
std::vector<std::vector<int>> sector(int n, int ones);

using Mat4 = std::array<std::array<cplx, 4>, 4>;

// R(z) on v_a (x) v_b, basis index 2a+b, first slot is leg i. Column c is R(e_c).
Mat4 r_matrix(cplx z, double q);
Mat4 flip_conjugate(const Mat4& m);

SpinVector apply_pair(const Mat4& m, int i, int j, const SpinVector& v);
SpinVector r_apply(cplx z, int i, int j, const SpinVector& v, const ParameterSet& ps);
SpinVector rhat_apply(cplx z, int i, int j, const SpinVector& v, const ParameterSet& ps);
SpinVector kappa_apply(cplx kappa, int j, const SpinVector& v);
SpinVector flip_all(const SpinVector& v);

}  // namespace qkz
