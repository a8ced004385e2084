#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qkz/params.hpp"

namespace qkz::checks {

struct CheckCase {
  nlohmann::json inputs;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct CheckSuite {
  std::string name;
  std::vector<CheckCase> cases;

  void add(nlohmann::json inputs, double residual, double tol);
  void add_flag(nlohmann::json inputs, bool ok);  // exact checks: residual 0 or 1
  void merge(const CheckSuite& other);
  double max_residual() const;
  bool pass() const;
};

// Unit-modulus points with every circular phase gap >= min_gap.
std::vector<cplx> auto_z(int n, std::uint64_t seed, double min_gap = 0.3);

// |a - b| / max(|a|, |b|, floor)
double rel_err(cplx a, cplx b, double floor = 1e-300);

CheckSuite qseries_identities(const ParameterSet& ps, std::uint64_t seed, int points = 200);
CheckSuite rmatrix_properties(const ParameterSet& ps, std::uint64_t seed, int draws = 50);
CheckSuite alternating_sum(int n_max, int draws, std::uint64_t seed, double q);
// closed-form u-integral against quadrature over the u-plan, l = 1, n in {1, 2}
CheckSuite u_integral(const ParameterSet& ps, std::uint64_t seed, int points = 20, int nodes = 256);
// sign-sum reduction for every nu with l zeros and every mu
CheckSuite theorem(const ParameterSet& ps, std::uint64_t seed, int points = 20);
// closed-form component against the sum over eps, mu
CheckSuite assembly(const ParameterSet& ps, std::uint64_t seed, int points = 20);

enum class PsiForm { TV, Tilde };
const char* to_string(PsiForm f);
CheckSuite qkz_residuals(const ParameterSet& ps, const std::vector<cplx>& z, int nodes, const std::vector<PsiForm>& forms);

CheckSuite ope(const ParameterSet& ps, std::uint64_t seed, int identity_points = 100, int line_points = 20);
CheckSuite elliptic_conditions(const ParameterSet& ps, std::uint64_t seed, int n_max = 4, int m_max = 2);

}  // namespace qkz::checks
