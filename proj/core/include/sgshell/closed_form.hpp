#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sgshell/boundary.hpp"
#include "sgshell/charts.hpp"
#include "sgshell/constitutive.hpp"

namespace sgshell {

enum class ExampleKind { RolledPlate, ExtensionRadial, Torsion };

std::string_view to_string(ExampleKind kind);
/// Accepts "roll", "extend", "twist" and the enum spellings; ConfigError otherwise.
ExampleKind parse_example_kind(const std::string& name);

/// One of the three cylinder equilibrium states.
struct ExampleCase {
  ExampleKind kind = ExampleKind::RolledPlate;
  double R = 1.0;
  double L = 2.0;
  double eta = 0.9;
  double zeta = 1.1;
  double gamma = 0.2;
  MaterialParameters material;

  /// λ = μ = 1, h = 0.1, ℓ_s = 0.05, R = 1, L = 2, γ = 0.2, η = 0.9, ζ = 1.1.
  static ExampleCase defaults(ExampleKind kind);

  /// Admissible draw: λ, μ ∈ [0.5, 2], h ∈ [0.05, 0.15], ℓ_s ∈ [0, 0.1],
  /// R ∈ [0.8, 1.5], L ∈ [1, 3], γ ∈ [0.05, 0.3], η ∈ [0.7, 0.95], ζ ∈ [1, 1.3].
  static ExampleCase random(ExampleKind kind, std::uint64_t seed);

  /// Throws ConfigError unless R, L, h > 0 and η, ζ > 0.
  void validate() const;

  Chart reference_chart() const;
  Chart deformed_chart() const;
};

struct ExampleEdgeValues {
  Eigen::Vector3d t;
  Eigen::Vector3d m;
  Eigen::Vector3d c;
};

/// Closed-form fields of an example. The resultant components are constant
/// over the domain; vector fields depend on θ through the current frame.
struct ExampleSolution {
  ExampleCase c;
  Eigen::Matrix2d sigma = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d N = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d M = Eigen::Matrix2d::Zero();
  std::array<Eigen::Matrix2d, 2> MM{Eigen::Matrix2d::Zero(), Eigen::Matrix2d::Zero()};
  /// g = g_radial · e_r at the current polar angle.
  double g_radial = 0.0;

  /// Current polar angle of the material point θ.
  double angle(const Eigen::Vector2d& theta) const;
  Eigen::Vector3d g(const Eigen::Vector2d& theta) const;
  std::array<Eigen::Vector3d, 2> T(const Eigen::Vector2d& theta) const;
  /// Loads on a named boundary edge ("v0", "v1", "u0", "u1").
  ExampleEdgeValues edge(const std::string& edge_name, const Eigen::Vector2d& theta) const;
  /// The traction as printed without the arclength-derivative term;
  /// differs from edge().t only for torsion.
  Eigen::Vector3d literal_traction(const std::string& edge_name, const Eigen::Vector2d& theta) const;
  std::vector<CornerForce> corner_forces() const;
};

ExampleSolution rolled_plate_solution(const ExampleCase& c);
ExampleSolution extension_radial_solution(const ExampleCase& c);
ExampleSolution torsion_solution(const ExampleCase& c);
ExampleSolution example_solution(const ExampleCase& c);

/// N¹¹(η, ζ) and M¹¹(η) of the extension/radial state, used by the
/// semi-inverse solve.
double extension_N11(const ExampleCase& c, double eta, double zeta);
double extension_M11(const ExampleCase& c, double eta);

struct ZetaSolve {
  double zeta = 1.0;
  double residual = 0.0;  // g·e_r at the root
  int iterations = 0;
};

/// Root ζ of g·e_r = 0 for 0 < η < 1 by bisection on [1, 10].
/// Throws BracketFailure if the bracket has no sign change.
ZetaSolve solve_zeta_for_eta(double eta, const ExampleCase& c);

/// One compared scalar: closed form against the numeric pipeline.
struct ComparisonRow {
  std::string quantity;
  double closed_form = 0.0;
  double pipeline = 0.0;
  double rel_error = 0.0;
  bool pass = true;
};

struct ComparisonTolerance {
  double relative = 1e-8;
  double absolute = 1e-12;
};

/// Compares σ, M, M^λστ, T^α, g at `samples` interior points and t, m, c at
/// `samples` points per edge plus every corner force.
std::vector<ComparisonRow> compare_with_pipeline(const ExampleCase& c, int samples = 3,
                                                 ComparisonTolerance tol = {});

}  // namespace sgshell
