#pragma once

#include <vector>

#include "qkz/params.hpp"
#include "qkz/spinchain.hpp"
#include "qkz/tvweights.hpp"

namespace qkz {

// Screening signs eps_a and current signs mu_i, entries +1 or -1.
struct ScreenSignConfig {
  std::vector<int> eps;
  std::vector<int> mu;
  std::vector<int> minus_positions() const;  // 1-based positions with mu = -1
};

// A sum together with the largest summand magnitude, the scale for "equals zero" checks.
struct SignSum {
  cplx value{0.0, 0.0};
  double scale = 0.0;
};

// In this module a component label nu has its support on the 0-bits: k_1 < ... < k_l.
cplx ghat(const SpinConfig& nu, const ScreenSignConfig& sc, const PointConfig& pts, const ParameterSet& ps);
// prod_{a<b} (q^{eps_b} t_b - q^{eps_a} t_a)/(t_b - q^-2 t_a)
cplx g_tail(const std::vector<int>& eps, const std::vector<cplx>& t, const ParameterSet& ps);
cplx gfull(const SpinConfig& nu, const ScreenSignConfig& sc, const PointConfig& pts, const ParameterSet& ps);

cplx f_prefactor(const SpinConfig& nu, const std::vector<int>& mu, const PointConfig& pts, const ParameterSet& ps);

// Residue-evaluated u-integral of ghat over the u-torus, closed form.
cplx i_residue_closed(const SpinConfig& nu, const ScreenSignConfig& sc, const PointConfig& pts, const ParameterSet& ps);

// sum over eps of prod eps_a * i_residue_closed * g_tail
SignSum signsum_g(const SpinConfig& nu, const std::vector<int>& mu, const PointConfig& pts, const ParameterSet& ps);

// q^{-2l + l(l-1)/2 - sum k_i} (q - q^-1)^l w_{(-nu)}
cplx theorem_rhs(const SpinConfig& nu, const PointConfig& pts, const ParameterSet& ps);
int theorem_q_exponent(const SpinConfig& nu);

// Component of the correlation function in closed form.
cplx f_component_closed(const SpinConfig& nu, const PointConfig& pts, const ParameterSet& ps);
// (-1)^l (q-q^-1)^{-2l} prod t^-1 sum_mu prod mu_i f_mu Phi signsum_g(mu)
cplx f_component_assembled(const SpinConfig& nu, const PointConfig& pts, const ParameterSet& ps);

// sum over eps in {+-1}^N of prod eps_j prod_{i>j} (q^{eps_i} t_i - q^{eps_j} t_j)
SignSum altsum_vanish(int N, const std::vector<cplx>& t, double q);

enum class OpePair { SS, PhiS, JS, PhiJ, JPhi, QComm, JJ, PhiPhi };
const char* to_string(OpePair k);

// Scalar prefactor of a pairwise operator product. (a, b) are the two
// arguments in the order the operators appear, (s1, s2) the sign labels
// where the pair has any (eps or mu); unused signs are ignored.
cplx ope_prefactor(OpePair kind, cplx a, cplx b, int s1, int s2, const ParameterSet& ps);

// Left side of the q-commutator identity: phi J prefactor minus q times the J phi prefactor.
cplx ope_qcomm_from_pairs(cplx z, cplx u, int mu, const ParameterSet& ps);

}  // namespace qkz
