#include <benchmark/benchmark.h>

#include "qkz/ellspace.hpp"
#include "qkz/qkzcheck.hpp"
#include "qkz/qseries.hpp"
#include "qkz/tvweights.hpp"

using namespace qkz;

namespace {
const std::vector<cplx> kZ2{std::polar(1.0, 0.4), std::polar(1.0, 2.9)};
}

static void BM_qpoch(benchmark::State& st) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  const cplx z{0.7, -0.4};
  for (auto _ : st) benchmark::DoNotOptimize(qpoch(z, ps.p));
}
BENCHMARK(BM_qpoch);

static void BM_theta(benchmark::State& st) {
  const auto ps = ParameterSet::make(0.6, 1.0);
  const cplx z{0.7, -0.4};
  for (auto _ : st) benchmark::DoNotOptimize(theta(z, ps));
}
BENCHMARK(BM_theta);

static void BM_weight_w(benchmark::State& st) {
  const int l = static_cast<int>(st.range(0));
  const auto ps = ParameterSet::make(0.6, 1.0, l, l);
  PointConfig pts;
  for (int i = 0; i < l; ++i) {
    pts.z.push_back(std::polar(1.0, 1.1 * i));
    pts.t.push_back(std::polar(0.8, 0.3 + 0.7 * i));
  }
  const SpinConfig cfg = SpinConfig::ones(std::vector<int>(l, 1));
  for (auto _ : st) benchmark::DoNotOptimize(weight_w(cfg, pts, ps));
}
BENCHMARK(BM_weight_w)->DenseRange(1, 5);

static void BM_phase_phi(benchmark::State& st) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 2);
  const PointConfig pts{kZ2, {std::polar(0.8, 0.3), std::polar(1.2, -1.0)}, {}};
  for (auto _ : st) benchmark::DoNotOptimize(phase_phi(pts, ps));
}
BENCHMARK(BM_phase_phi);

static void BM_psi_tv(benchmark::State& st) {
  const auto ps = ParameterSet::make(0.6, 1.0, 2, 1);
  const StructuredW w = solve_default_w(ps);
  const int nodes = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(psi_tv(w, ps, kZ2, nodes));
}
BENCHMARK(BM_psi_tv)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
