// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// detail lines. Exit status is the number of failed criteria, unless
// --known-failures=2,3 is given: then the run succeeds only when exactly the
// listed criteria fail, so ctest notices both regressions and fixes.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "sgshell/asymptotics.hpp"
#include "sgshell/closed_form.hpp"
#include "sgshell/geometry.hpp"

using namespace sgshell;

namespace {

// Tolerances and budgets.
constexpr double kExampleRelative = 1e-8;
constexpr double kExampleAbsolute = 1e-12;
constexpr int kExampleDraws = 20;
constexpr double kSlopeTarget = 3.5;
constexpr double kZetaResidual = 1e-12;
constexpr double kZetaOracle = 1.3269290639445428;
constexpr double kZetaOracleTolerance = 1e-6;
constexpr int kInvariantCases = 100;
constexpr double kBudget1 = 10.0, kBudget2 = 60.0, kBudget6 = 120.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void note(const std::string& line) { details.push_back(line); }
  void require(bool ok, const std::string& line) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok    " : "FAIL  ") + line);
  }
};

std::string fmt(const char* pattern, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

std::string slopes(const ConvergenceReport& r) {
  std::string s;
  for (size_t i = 0; i < r.h.size(); ++i) s += fmt(" %.3e", r.residual[i]);
  return fmt("%-34s slope %.3f  residuals", r.name.c_str(), r.slope) + s;
}

Outcome criterion_closed_form() {
  Outcome o;
  const ComparisonTolerance tol{kExampleRelative, kExampleAbsolute};
  for (ExampleKind kind : {ExampleKind::RolledPlate, ExampleKind::ExtensionRadial, ExampleKind::Torsion}) {
    int rows = 0, failures = 0;
    double worst = 0.0;
    std::string worst_name;
    auto tally = [&](const std::vector<ComparisonRow>& rs, const std::string& label) {
      for (const auto& r : rs) {
        ++rows;
        if (!r.pass) ++failures;
        const double err = std::abs(r.pipeline - r.closed_form);
        const double rel = err / std::max(std::abs(r.closed_form), kExampleAbsolute / kExampleRelative);
        if (rel > worst) {
          worst = rel;
          worst_name = label + " " + r.quantity;
        }
      }
    };
    tally(compare_with_pipeline(ExampleCase::defaults(kind), 3, tol), "defaults");
    for (int d = 0; d < kExampleDraws; ++d) {
      const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(d);
      tally(compare_with_pipeline(ExampleCase::random(kind, seed), 3, tol), fmt("seed %llu", (unsigned long long)seed));
    }
    o.require(failures == 0, fmt("%-7s %5d compared values over defaults + %d draws, %d failures, worst %.2e (%s)",
                                 std::string(to_string(kind)).c_str(), rows, kExampleDraws, failures, worst,
                                 worst_name.c_str()));
  }
  return o;
}

Outcome criterion_asymptotic_order() {
  Outcome o;
  AsymptoticSettings settings;
  settings.target_slope = kSlopeTarget;
  for (const char* chart : {"plate", "cylinder"}) {
    for (GradientModel model : {GradientModel::Dilatational, GradientModel::ToupinMindlin}) {
      const ConvergenceReport r = expansion_residual(scaling_family(chart, model), ShellDensity::KoiterPlusW4, settings);
      o.require(r.pass, slopes(r));
    }
  }
  settings.bending_scale = 2.0;
  o.note("with the h^3/12 bending coefficient in W_Koiter (not the criterion):");
  for (const char* chart : {"plate", "cylinder"}) {
    for (GradientModel model : {GradientModel::Dilatational, GradientModel::ToupinMindlin}) {
      o.note("  " + slopes(expansion_residual(scaling_family(chart, model), ShellDensity::KoiterPlusW4, settings)));
    }
  }
  return o;
}

Outcome criterion_koiter_recovery() {
  Outcome o;
  AsymptoticSettings settings;
  settings.target_slope = kSlopeTarget;

  // W4 vanishes identically once the length scales are zero.
  double w4_max = 0.0;
  testing::Rng rng(7);
  for (int n = 0; n < 50; ++n) {
    const Chart ref = testing::random_reference(rng);
    const Chart def = testing::random_deformation(ref, rng, 0.1);
    const KinematicState kin = kinematics_from(strain_jets(ref, def, testing::random_point(ref.domain(), rng), 3));
    MaterialParameters m = testing::random_dilatational(rng);
    m.gradient = Dilatational{0.0};
    w4_max = std::max(w4_max, std::abs(w4_density(kin, m)));
    m.gradient = ToupinMindlin{};
    w4_max = std::max(w4_max, std::abs(w4_density(kin, m)));
  }
  o.require(w4_max == 0.0, fmt("W4 with l_s = 0 and a_j = 0 over 50 random states: max |W4| = %.1e", w4_max));

  for (const char* chart : {"plate", "cylinder"}) {
    const ConvergenceReport control =
        expansion_residual(scaling_family(chart, GradientModel::None), ShellDensity::Koiter, settings);
    o.require(control.pass, slopes(control));
    const ConvergenceReport three =
        expansion_residual(scaling_family(chart, GradientModel::None), ShellDensity::ThreeTerm, settings);
    o.require(three.pass, slopes(three));
  }
  settings.bending_scale = 2.0;
  o.note("with the h^3/12 bending coefficient in W_Koiter (not the criterion):");
  for (const char* chart : {"plate", "cylinder"}) {
    o.note("  " + slopes(expansion_residual(scaling_family(chart, GradientModel::None), ShellDensity::Koiter, settings)));
    o.note("  " +
           slopes(expansion_residual(scaling_family(chart, GradientModel::None), ShellDensity::ThreeTerm, settings)));
  }
  return o;
}

Outcome criterion_kinetic() {
  Outcome o;
  AsymptoticSettings settings;
  settings.target_slope = kSlopeTarget;
  for (const char* chart : {"plate", "cylinder"}) {
    const ConvergenceReport r = kinetic_expansion_residual(kinetic_family(chart, KineticMotion::OscillatingBend), settings);
    o.require(r.pass, slopes(r));
  }

  // h straddling 2r on a sphere and 2·sqrt(3)·R on a cylinder, with H and K
  // taken from the charts.
  const std::vector<double> offsets{-1e-1, -1e-3, -1e-6, -1e-9, -1e-12, 1e-12, 1e-9, 1e-6, 1e-3, 1e-1};
  int mismatches = 0;
  const double r = 1.3, R = 0.7;
  const GeometryState sphere = geometry_at(charts::sphere(r, 0.5, 2.0, -0.5, 0.5), {1.1, 0.1});
  const GeometryState cylinder = geometry_at(charts::cylinder(R, 1.0, 1.0), {0.1, 0.5});
  for (double d : offsets) {
    const double hs = 2.0 * r * (1.0 + d);
    if (kinetic_positive_definite(sphere.mean, sphere.gauss, hs) != (hs < 2.0 * r)) ++mismatches;
    const double hc = 2.0 * std::sqrt(3.0) * R * (1.0 + d);
    if (kinetic_positive_definite(cylinder.mean, cylinder.gauss, hc) != (hc < 2.0 * std::sqrt(3.0) * R)) ++mismatches;
  }
  o.require(mismatches == 0, fmt("positive-definiteness thresholds h < 2r and h < 2 sqrt(3) R at %zu samples each: "
                                 "%d mismatches",
                                 offsets.size(), mismatches));
  return o;
}

Outcome criterion_semi_inverse() {
  Outcome o;
  const ExampleCase c = ExampleCase::defaults(ExampleKind::ExtensionRadial);
  for (double eta : {0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
    const ZetaSolve z = solve_zeta_for_eta(eta, c);
    o.require(z.zeta > 1.0 && std::abs(z.residual) < kZetaResidual,
              fmt("eta %.2f: zeta = %.15f, |g.e_r| = %.1e", eta, z.zeta, std::abs(z.residual)));
  }
  testing::Rng rng(11);
  int bad = 0;
  for (int n = 0; n < 20; ++n) {
    ExampleCase rc = c;
    rc.material.lambda = testing::uniform(rng, 0.1, 5.0);
    rc.material.mu = testing::uniform(rng, 0.1, 5.0);
    for (double eta : {0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
      const ZetaSolve z = solve_zeta_for_eta(eta, rc);
      if (!(z.zeta > 1.0 && std::abs(z.residual) < kZetaResidual)) ++bad;
    }
  }
  o.require(bad == 0, fmt("20 random (lambda, mu) > 0 over the eta sweep: %d failures", bad));
  const double z09 = solve_zeta_for_eta(0.9, c).zeta;
  o.require(std::abs(z09 - kZetaOracle) < kZetaOracleTolerance,
            fmt("zeta(0.9) = %.15f against oracle %.15f", z09, kZetaOracle));
  return o;
}

Outcome criterion_invariants() {
  Outcome o;
  using Suite = std::function<testing::SuiteResult(int, std::uint64_t)>;
  const std::vector<Suite> suites{testing::frame_indifference_suite, testing::trace_identity_suite,
                                  testing::metric_invariant_suite,   testing::balance_suite,
                                  testing::isotropy_suite,           testing::nonnegativity_suite};
  std::uint64_t seed = 2024;
  for (const Suite& suite : suites) {
    const testing::SuiteResult r = suite(kInvariantCases, seed++);
    o.require(r.pass, fmt("%-34s %d cases, max error %.2e (tolerance %.0e)%s%s", r.name.c_str(), r.cases, r.max_error,
                          r.tolerance, r.detail.empty() ? "" : ", worst in ", r.detail.c_str()));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const std::string prefix = "--known-failures=";
    if (arg.rfind(prefix, 0) != 0) {
      std::fprintf(stderr, "usage: %s [--known-failures=N,M,...]\n", argv[0]);
      return 64;
    }
    std::istringstream list(arg.substr(prefix.size()));
    for (std::string item; std::getline(list, item, ',');) known.insert(std::stoi(item));
  }

  struct Criterion {
    int id;
    const char* title;
    double budget;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "closed-form examples match the equilibrium pipeline", kBudget1, criterion_closed_form},
      {2, "stored energy expansion residual is O(h^4) with W4", kBudget2, criterion_asymptotic_order},
      {3, "Koiter recovery and the three-term expansion", 0.0, criterion_koiter_recovery},
      {4, "kinetic expansion and positive-definiteness thresholds", 0.0, criterion_kinetic},
      {5, "semi-inverse radial stretch exists and matches the oracle", 0.0, criterion_semi_inverse},
      {6, "randomized invariant suites", kBudget6, criterion_invariants},
  };

  int failed = 0;
  std::set<int> failing;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0.0 && seconds > c.budget) {
      o.pass = false;
      o.note(fmt("runtime %.2f s exceeds the %.0f s budget", seconds, c.budget));
    }
    std::printf("[%s] criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds);
    for (const auto& line : o.details) std::printf("         %s\n", line.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      failing.insert(c.id);
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  if (argc > 1) {
    const bool as_expected = failing == known;
    std::printf("known failures %s\n", as_expected ? "match" : "DO NOT match this run");
    return as_expected ? 0 : 1;
  }
  return failed;
}
