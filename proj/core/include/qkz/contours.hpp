#pragma once

#include <functional>
#include <vector>

#include "qkz/params.hpp"

namespace qkz {

enum class Measure {
  DtOverT,  // prod dt_a / (2 pi i t_a)
  Dt,       // prod dt_a / (2 pi i)
};

struct Correction {
  int var = 0;          // 0-based integration variable
  cplx pole;
  int orientation = 1;  // +1 adds a positive loop, -1 subtracts one
  double radius = 0.0;  // static radius; may shrink at run time near moving poles
};

// Base circles |t_a| = r plus small loops. For the t-torus the conditions
// involving other t_b are applied during integration, where t_b is known:
// variable a (0-based) is integrated innermost-first and sees t_b, b > a.
struct ContourPlan {
  std::vector<double> radii;
  std::vector<Correction> corrections;
  int nodes = 256;
  double correction_radius_factor = 0.5;

  // points that must end up inside / outside every variable's contour
  std::vector<cplx> inside;
  std::vector<cplx> outside;
  // t-relative families q^{+-2} p^{+-s} t_b for s < shift_depth
  bool relative = false;
  int shift_depth = 3;
  double q = 0.6;
  double p = 0.0;

  int vars() const { return static_cast<int>(radii.size()); }
  int loop_nodes() const { return nodes / 4 < 8 ? 8 : nodes / 4; }
};

ContourPlan build_t_contours(const ParameterSet& ps, const std::vector<cplx>& z, int nodes = 256);

// Same poles, different common base radius. Throws DomainError when the new
// radius sits on a pole.
ContourPlan with_base_radius(const ContourPlan& plan, double r);

// u-contour for a single current variable (l = 1).
ContourPlan build_u_contours(const ParameterSet& ps, const std::vector<cplx>& z, const std::vector<cplx>& t, int mu,
                             int nodes = 256);

struct IntegralResult {
  cplx value{0.0, 0.0};
  double magnitude = 0.0;  // sum over nodes of |weight * sample|, a scale for cancellation
};

using Integrand = std::function<cplx(const std::vector<cplx>&)>;

// f must be pure; outer nodes may be evaluated on several threads.
IntegralResult integrate(const ContourPlan& plan, const Integrand& f, Measure measure = Measure::DtOverT);

}  // namespace qkz
