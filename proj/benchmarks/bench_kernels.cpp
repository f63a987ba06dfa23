#include <benchmark/benchmark.h>

#include "sgshell/asymptotics.hpp"
#include "sgshell/closed_form.hpp"
#include "sgshell/equilibrium.hpp"
#include "sgshell/kinematics.hpp"

using namespace sgshell;

namespace {

const ScalingFamily& plate_family() {
  static const ScalingFamily f = scaling_family("plate", GradientModel::Dilatational);
  return f;
}

}  // namespace

static void BM_JetProduct(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Jet u = Jet::variable(0, 0.3, order), v = Jet::variable(1, 0.7, order);
  const Jet a = sin(u) * v + 1.0, b = cos(v) + u * u;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetProduct)->DenseRange(2, 5);

static void BM_SurfaceJets(benchmark::State& state) {
  const Chart c = charts::sphere(1.0, 0.5, 2.5, -1.0, 1.0);
  const Eigen::Vector2d theta(1.1, 0.2);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(surface_jets(c.expand(theta, order)));
}
BENCHMARK(BM_SurfaceJets)->DenseRange(2, 4);

static void BM_ShellJets(benchmark::State& state) {
  const double h = 0.04;
  const Chart def = plate_family().deformed(h);
  const Eigen::Vector2d theta(0.4, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(shell_jets(plate_family().reference, def, theta, 1.0, 1.0, 4));
}
BENCHMARK(BM_ShellJets);

static void BM_Recovered3D(benchmark::State& state) {
  const ShellJets s = shell_jets(plate_family().reference, plate_family().deformed(0.04), {0.4, 0.6}, 1.0, 1.0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(recovered_3d_motion(s, 0.01));
}
BENCHMARK(BM_Recovered3D);

static void BM_ResultantJets(benchmark::State& state) {
  const ExampleCase c = ExampleCase::defaults(ExampleKind::Torsion);
  const Chart ref = c.reference_chart(), def = c.deformed_chart();
  const StrainJets k = strain_jets(ref, def, {0.3, 1.0}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_jets(k, c.material));
}
BENCHMARK(BM_ResultantJets);

static void BM_ThroughThicknessEnergy(benchmark::State& state) {
  const double h = 0.04;
  const Chart def = plate_family().deformed(h);
  const MaterialParameters m = plate_family().material(h);
  AsymptoticSettings settings;
  settings.quadrature_order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(through_thickness_energy(plate_family().reference, def, m, settings));
}
BENCHMARK(BM_ThroughThicknessEnergy)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ExampleComparison(benchmark::State& state) {
  const ExampleCase c = ExampleCase::defaults(static_cast<ExampleKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compare_with_pipeline(c));
}
BENCHMARK(BM_ExampleComparison)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_SolveZeta(benchmark::State& state) {
  const ExampleCase c = ExampleCase::defaults(ExampleKind::ExtensionRadial);
  for (auto _ : state) benchmark::DoNotOptimize(solve_zeta_for_eta(0.9, c));
}
BENCHMARK(BM_SolveZeta);

BENCHMARK_MAIN();
