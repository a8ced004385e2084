#include "qkz/spinchain.hpp"

#include <cmath>

#include "qkz/errors.hpp"
#include "qkz/qseries.hpp"

namespace qkz {

SpinVector::SpinVector(int n) : n_(n) {
  if (n < 1 || n > 24) throw DomainError("SpinVector: n out of range");
  coeffs_.assign(std::size_t{1} << n, cplx{0.0, 0.0});
}

std::size_t SpinVector::index_of(const std::vector<int>& bits) {
  std::size_t idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("spin bits must be 0 or 1");
    idx = (idx << 1) | static_cast<std::size_t>(b);
  }
  return idx;
}

std::vector<int> SpinVector::bits_of(std::size_t idx, int n) {
  std::vector<int> b(n);
  for (int leg = 1; leg <= n; ++leg) b[leg - 1] = bit(idx, leg, n);
  return b;
}

SpinVector SpinVector::basis(const std::vector<int>& bits) {
  SpinVector v(static_cast<int>(bits.size()));
  v.at(bits) = 1.0;
  return v;
}

double SpinVector::sup_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

int SpinVector::ones_in_support_max() const {
  int best = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != cplx{0.0, 0.0}) {
      int c = 0;
      for (std::size_t x = i; x; x >>= 1) c += static_cast<int>(x & 1u);
      best = std::max(best, c);
    }
  return best;
}

SpinVector& SpinVector::operator+=(const SpinVector& o) {
  if (o.n_ != n_) throw DomainError("SpinVector size mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SpinVector& SpinVector::operator-=(const SpinVector& o) {
  if (o.n_ != n_) throw DomainError("SpinVector size mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SpinVector& SpinVector::operator*=(cplx c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

SpinVector operator+(SpinVector a, const SpinVector& b) { return a += b; }
SpinVector operator-(SpinVector a, const SpinVector& b) { return a -= b; }
SpinVector operator*(cplx c, SpinVector v) { return v *= c; }

SpinConfig SpinConfig::with_support_on(const std::vector<int>& bits, int value) {
  SpinConfig c;
  c.n = static_cast<int>(bits.size());
  c.bits = bits;
  c.support_value = value;
  for (int i = 0; i < c.n; ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw DomainError("spin bits must be 0 or 1");
    if (bits[i] == value) c.support.push_back(i + 1);
  }
  return c;
}

SpinConfig SpinConfig::flipped() const {
  std::vector<int> b(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) b[i] = 1 - bits[i];
  return with_support_on(b, support_value);
}

std::vector<std::vector<int>> sector(int n, int ones) {
  std::vector<std::vector<int>> out;
  for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
    auto b = SpinVector::bits_of(idx, n);
    int c = 0;
    for (int x : b) c += x;
    if (c == ones) out.push_back(std::move(b));
  }
  return out;
}

Mat4 r_matrix(cplx z, double q) {
  const double q2 = q * q;
  const cplx d = 1.0 - q2 * z;
  if (std::abs(d) < 1e-14) throw PoleError("R-matrix evaluated at z = q^-2");
  const cplx a = q * (1.0 - z) / d;
  const cplx b = (1.0 - q2) / d;
  const cplx c = (1.0 - q2) * z / d;
  Mat4 m{};
  m[0][0] = 1.0;
  m[3][3] = 1.0;
  // R(v0 v1) = a v0 v1 + b v1 v0
  m[1][1] = a;
  m[2][1] = b;
  // R(v1 v0) = c v0 v1 + a v1 v0
  m[1][2] = c;
  m[2][2] = a;
  return m;
}

Mat4 flip_conjugate(const Mat4& m) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r][c] = m[3 - r][3 - c];
  return out;
}

SpinVector apply_pair(const Mat4& m, int i, int j, const SpinVector& v) {
  const int n = v.n();
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw DomainError("leg indices must be distinct and in 1..n");
  const std::size_t mi = std::size_t{1} << (n - i);
  const std::size_t mj = std::size_t{1} << (n - j);
  SpinVector out(n);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (idx & (mi | mj)) continue;
    const std::size_t slot[4] = {idx, idx | mj, idx | mi, idx | mi | mj};
    for (int c = 0; c < 4; ++c) {
      const cplx x = v[slot[c]];
      if (x == cplx{0.0, 0.0}) continue;
      for (int r = 0; r < 4; ++r)
        if (m[r][c] != cplx{0.0, 0.0}) out[slot[r]] += m[r][c] * x;
    }
  }
  return out;
}

SpinVector r_apply(cplx z, int i, int j, const SpinVector& v, const ParameterSet& ps) {
  return apply_pair(r_matrix(z, ps.q), i, j, v);
}

SpinVector rhat_apply(cplx z, int i, int j, const SpinVector& v, const ParameterSet& ps) {
  SpinVector out = apply_pair(flip_conjugate(r_matrix(z, ps.q)), i, j, v);
  out *= rho(z, ps);
  return out;
}

SpinVector kappa_apply(cplx kappa, int j, const SpinVector& v) {
  const int n = v.n();
  if (j < 1 || j > n) throw DomainError("leg index out of range");
  SpinVector out = v;
  for (std::size_t idx = 0; idx < v.size(); ++idx)
    if (SpinVector::bit(idx, j, n)) out[idx] *= kappa;
  return out;
}

SpinVector flip_all(const SpinVector& v) {
  SpinVector out(v.n());
  const std::size_t mask = v.size() - 1;
  for (std::size_t idx = 0; idx < v.size(); ++idx) out[mask ^ idx] = v[idx];
  return out;
}

}  // namespace qkz
