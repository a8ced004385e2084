#include "qkz/contours.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

#include "qkz/errors.hpp"

namespace qkz {
namespace {

struct Piece {
  cplx center;
  double radius;
  int orientation;
  int nodes;
};

bool same_point(cplx a, cplx b) { return std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)); }

double loop_radius(cplx c, const std::vector<const std::vector<cplx>*>& sets, double cap) {
  double d = std::abs(c);  // the origin is always singular for the measure
  for (const auto* set : sets)
    for (const cplx& y : *set)
      if (!same_point(y, c)) d = std::min(d, std::abs(y - c));
  return std::min(0.5 * d, cap);
}

// Everything variable a must respect, given the outer variables t_b (b > a).
void collect(const ContourPlan& plan, int a, const std::vector<cplx>& t, std::vector<cplx>& in,
             std::vector<cplx>& out, std::vector<cplx>& extra) {
  in = plan.inside;
  out = plan.outside;
  extra.clear();
  if (!plan.relative) return;
  const double q2 = plan.q * plan.q;
  for (int b = a + 1; b < plan.vars(); ++b) {
    double ps = 1.0;
    for (int s = 0; s < plan.shift_depth; ++s, ps *= plan.p) {
      in.push_back(q2 * ps * t[b]);
      out.push_back(t[b] / (q2 * ps));
    }
    // images seen by the inner variables once they are pinned to t_b
    if (a > 0) {
      extra.push_back(q2 * q2 * t[b]);
      extra.push_back(t[b] / (q2 * q2));
    }
  }
}

std::vector<Piece> pieces_for(const ContourPlan& plan, int a, const std::vector<cplx>& t) {
  std::vector<cplx> in, out, extra;
  collect(plan, a, t, in, out, extra);
  const double r = plan.radii[a];
  const double cap = plan.correction_radius_factor * r;
  const std::vector<const std::vector<cplx>*> sets{&in, &out, &extra};
  std::vector<Piece> pieces{{cplx{0.0, 0.0}, r, 1, plan.nodes}};
  for (const cplx& c : in)
    if (std::abs(c) > r) pieces.push_back({c, loop_radius(c, sets, cap), 1, plan.loop_nodes()});
  for (const cplx& c : out)
    if (std::abs(c) < r) pieces.push_back({c, loop_radius(c, sets, cap), -1, plan.loop_nodes()});
  return pieces;
}

void fill_static_corrections(ContourPlan& plan) {
  plan.corrections.clear();
  const std::vector<cplx> none;
  const std::vector<const std::vector<cplx>*> sets{&plan.inside, &plan.outside};
  for (int a = 0; a < plan.vars(); ++a) {
    const double r = plan.radii[a];
    for (const cplx& y : plan.inside)
      if (std::abs(std::abs(y) - r) < 1e-9 * r) throw DomainError("contour radius passes through a pole");
    for (const cplx& y : plan.outside)
      if (std::abs(std::abs(y) - r) < 1e-9 * r) throw DomainError("contour radius passes through a pole");
    const double cap = plan.correction_radius_factor * r;
    for (const cplx& c : plan.inside)
      if (std::abs(c) > r) plan.corrections.push_back({a, c, 1, loop_radius(c, sets, cap)});
    for (const cplx& c : plan.outside)
      if (std::abs(c) < r) plan.corrections.push_back({a, c, -1, loop_radius(c, sets, cap)});
  }
  for (const auto& c : plan.corrections)
    if (c.radius < 1e-6 * plan.radii[c.var])
      throw DomainError("correction pole nearly collides with another singularity");
}

// Base radius: among gaps between pole moduli (and their q^{2e} images for
// the relative families), the one needing fewest corrections, widest first.
double choose_radius(const std::vector<cplx>& in, const std::vector<cplx>& out, double q, int l) {
  std::vector<double> mods;
  for (const auto* set : {&in, &out})
    for (const cplx& x : *set)
      for (int e = -(l - 1); e <= l - 1; ++e) mods.push_back(std::abs(x) * std::pow(q, 2.0 * e));
  std::sort(mods.begin(), mods.end());
  bool found = false;
  int best_cnt = 0;
  double best_gap = 0.0, best_r = 0.0;
  for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
    const double lo = mods[i], hi = mods[i + 1];
    if (hi / lo < 1.05) continue;
    const double rr = std::sqrt(lo * hi);
    int cnt = 0;
    for (const cplx& x : in) cnt += std::abs(x) > rr;
    for (const cplx& x : out) cnt += std::abs(x) < rr;
    const double gap = std::log(hi / lo);
    if (!found || cnt < best_cnt || (cnt == best_cnt && gap > best_gap)) {
      found = true;
      best_cnt = cnt;
      best_gap = gap;
      best_r = rr;
    }
  }
  if (!found) throw DomainError("no admissible base radius");
  return best_r;
}

struct Acc {
  cplx value{0.0, 0.0};
  double magnitude = 0.0;
};

class Nested {
 public:
  Nested(const ContourPlan& plan, const Integrand& f, Measure measure) : plan_(plan), f_(f), measure_(measure) {}

  Acc run() {
    const int top = plan_.vars() - 1;
    std::vector<cplx> t(plan_.vars());
    const auto pieces = pieces_for(plan_, top, t);
    struct Node {
      cplx x, w;
    };
    std::vector<Node> nodes;
    for (const Piece& pc : pieces) {
      for (int k = 0; k < pc.nodes; ++k) {
        const cplx e = node_phase(k, pc.nodes, top);
        nodes.push_back({pc.center + pc.radius * e, static_cast<double>(pc.orientation) * pc.radius * e / double(pc.nodes)});
      }
    }
    std::vector<Acc> parts(nodes.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, nodes.size() / 16 + 1));
    std::vector<std::exception_ptr> errors(nthreads);
    auto work = [&](unsigned id) {
      try {
        std::vector<cplx> tl(plan_.vars());
        for (std::size_t i = id; i < nodes.size(); i += nthreads) {
          tl[top] = nodes[i].x;
          Acc sub = level(top - 1, tl, std::abs(nodes[i].w));
          parts[i] = {nodes[i].w * sub.value, sub.magnitude};
        }
      } catch (...) {
        errors[id] = std::current_exception();
      }
    };
    if (nthreads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < nthreads; ++id) pool.emplace_back(work, id);
      for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    Acc total;
    for (const Acc& a : parts) {
      total.value += a.value;
      total.magnitude += a.magnitude;
    }
    return total;
  }

 private:
  cplx node_phase(int k, int m, int a) const {
    const double off = (a + 0.5) / (plan_.vars() + 1.0);
    return std::polar(1.0, 2.0 * std::numbers::pi * (k + off) / m);
  }

  Acc level(int a, std::vector<cplx>& t, double wmag) const {
    if (a < 0) return leaf(t, wmag);
    Acc acc;
    for (const Piece& pc : pieces_for(plan_, a, t)) {
      for (int k = 0; k < pc.nodes; ++k) {
        const cplx e = node_phase(k, pc.nodes, a);
        const cplx w = static_cast<double>(pc.orientation) * pc.radius * e / double(pc.nodes);
        t[a] = pc.center + pc.radius * e;
        Acc sub = level(a - 1, t, wmag * std::abs(w));
        acc.value += w * sub.value;
        acc.magnitude += sub.magnitude;
      }
    }
    return acc;
  }

  Acc leaf(const std::vector<cplx>& t, double wmag) const {
    cplx g = f_(t);
    if (measure_ == Measure::DtOverT)
      for (const cplx& x : t) g /= x;
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
      std::ostringstream os;
      os << "non-finite integrand sample at t = (";
      for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
      os << ")";
      throw NonFiniteSample(os.str());
    }
    return {g, wmag * std::abs(g)};
  }

  const ContourPlan& plan_;
  const Integrand& f_;
  Measure measure_;
};

}  // namespace

ContourPlan build_t_contours(const ParameterSet& ps, const std::vector<cplx>& z, int nodes) {
  if (nodes < 8) throw DomainError("need at least 8 quadrature nodes");
  if (static_cast<int>(z.size()) != ps.n) throw DomainError("build_t_contours: need n values of z");
  if (!(ps.p / ps.q < ps.q)) throw DomainError("contour window (p/q, q) is empty; need k > -1");
  for (const cplx& x : z)
    if (x == cplx{0.0, 0.0}) throw DomainError("z must be nonzero");
  ContourPlan plan;
  plan.nodes = nodes;
  plan.q = ps.q;
  plan.p = ps.p;
  plan.relative = ps.l >= 2;
  const double q = ps.q, p = ps.p;
  for (const cplx& zj : z) {
    double pw = 1.0;
    for (int s = 0; s < plan.shift_depth; ++s, pw *= p) {
      plan.inside.push_back(pw * zj / q);
      plan.outside.push_back(q * zj / pw);
      // images pinned through t_b = q^-1 z_j and t_b = q z_j
      if (s >= 1) {
        plan.inside.push_back(q * pw * zj);
        plan.outside.push_back(zj / (q * pw));
      }
    }
  }
  if (ps.l == 0) return plan;
  const double r = choose_radius(plan.inside, plan.outside, q, ps.l);
  plan.radii.assign(ps.l, r);
  fill_static_corrections(plan);
  return plan;
}

ContourPlan with_base_radius(const ContourPlan& plan, double r) {
  ContourPlan out = plan;
  std::fill(out.radii.begin(), out.radii.end(), r);
  fill_static_corrections(out);
  return out;
}

ContourPlan build_u_contours(const ParameterSet& ps, const std::vector<cplx>& z, const std::vector<cplx>& t, int mu,
                             int nodes) {
  if (t.size() != 1) throw DomainError("direct u-quadrature is only available for l = 1");
  if (mu != 1 && mu != -1) throw DomainError("mu must be +1 or -1");
  if (nodes < 8) throw DomainError("need at least 8 quadrature nodes");
  ContourPlan plan;
  plan.nodes = nodes;
  plan.q = ps.q;
  plan.p = ps.p;
  const double k = ps.k;
  double in_max = 0.0, out_min = INFINITY;
  for (const cplx& zj : z) {
    plan.inside.push_back(ps.qpow(k + 3) * zj);
    plan.outside.push_back(ps.qpow(k + 1) * zj);
    in_max = std::max(in_max, std::abs(plan.inside.back()));
    out_min = std::min(out_min, std::abs(plan.outside.back()));
  }
  if (!(in_max < out_min)) throw DomainError("u-contour window is empty for these z");
  plan.inside.push_back(ps.qpow(-mu * (k + 2)) * t[0]);
  plan.radii = {std::sqrt(in_max * out_min)};
  fill_static_corrections(plan);
  return plan;
}

IntegralResult integrate(const ContourPlan& plan, const Integrand& f, Measure measure) {
  if (plan.vars() == 0) {
    const cplx g = f({});
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) throw NonFiniteSample("non-finite integrand (no variables)");
    return {g, std::abs(g)};
  }
  Nested nested(plan, f, measure);
  const Acc a = nested.run();
  return {a.value, a.magnitude};
}

}  // namespace qkz
