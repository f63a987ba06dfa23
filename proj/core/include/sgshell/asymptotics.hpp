#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sgshell/charts.hpp"
#include "sgshell/constitutive.hpp"
#include "sgshell/kinematics.hpp"

namespace sgshell {

/// Quadrature and pass-threshold settings shared by the convergence studies.
struct AsymptoticSettings {
  int zeta_order = 8;
  int quadrature_order = 6;
  int panels = 2;
  double target_slope = 3.5;
  /// Multiplier on the h³ bending part of W_Koiter in the residuals. 1 keeps
  /// the h³/24 coefficient; 2 gives the h³/12 plate-bending coefficient.
  double bending_scale = 1.0;
};

/// A one-parameter family of deformed shells indexed by the thickness h.
struct ScalingFamily {
  std::string name;
  Chart reference;
  std::function<Chart(double h)> deformed;
  std::function<MaterialParameters(double h)> material;
  std::vector<double> h_grid{0.16, 0.08, 0.04, 0.02};
  /// Membrane strain bound |ε| <= C2 h, checked at every quadrature node.
  double C2 = 5.0;
};

enum class GradientModel { None, Dilatational, ToupinMindlin };

struct FamilyOptions {
  double lambda = 1.0;
  double mu = 1.0;
  /// ℓ_s = ell_ratio · h.
  double ell_ratio = 0.5;
  /// a_j = tm_coefficients[j] · ℓ_s².
  std::array<double, 5> tm_coefficients{0.2, 0.1, 0.3, 1.0, 0.25};
  /// Scales the O(h) displacement added on top of the isometric bending.
  double amplitude = 1.0;
  std::vector<double> h_grid{0.16, 0.08, 0.04, 0.02};
};

/// "plate": a square plate rolled to a cylinder of radius 1 plus h·u(θ).
/// "cylinder": a cylindrical patch of radius 1 rerolled to radius 1.5 plus h·u(θ).
ScalingFamily scaling_family(const std::string& chart, GradientModel model, const FamilyOptions& options = {});

struct ConvergenceReport {
  std::string name;
  std::vector<double> h;
  std::vector<double> residual;
  std::vector<double> local_slope;  // between consecutive grid points; first entry NaN
  double slope = 0.0;
  double intercept = 0.0;
  double target = 3.5;
  bool pass = false;
};

/// Least-squares fit of log r = slope · log h + intercept over >= 3 points.
ConvergenceReport fit_convergence(std::string name, const std::vector<double>& h, const std::vector<double>& residual,
                                  double target);

/// ∫ W μ_s dζ at one point for the 3D energy selected by the material.
double through_thickness_density(const ShellJets& shell, const MaterialParameters& mat, int zeta_order = 8);

/// Surface integral of the above; charts must provide fourth partials.
double through_thickness_energy(const Chart& reference, const Chart& deformed, const MaterialParameters& mat,
                                const AsymptoticSettings& settings = {});

struct ThreeTermEnergy {
  double W1 = 0.0;
  double W2 = 0.0;
  double W3 = 0.0;
};

/// Classical W₁, W₂, W₃ for the quadratic W_s with the leading directors.
ThreeTermEnergy classical_three_term_energy(const ShellJets& shell, const MaterialParameters& mat);
ThreeTermEnergy classical_three_term_energy(const Chart& reference, const Chart& deformed,
                                            const Eigen::Vector2d& theta, const MaterialParameters& mat);

enum class ShellDensity {
  KoiterPlusW4,  // |∫3D - ∫(W_Koiter + W₄)|
  Koiter,        // |∫3D - ∫W_Koiter|
  ThreeTerm,     // |∫((1 + h²K/12)W₁ + W₂ + W₃ - W_Koiter)|
};

ConvergenceReport expansion_residual(const ScalingFamily& family, ShellDensity density,
                                     const AsymptoticSettings& settings = {});

/// A family of motions y(θ, t) indexed by h, sampled at time t0.
struct KineticFamily {
  std::string name;
  Chart reference;
  std::function<Chart(double h, double t)> deformed;
  std::function<MaterialParameters(double h)> material;
  std::vector<double> h_grid{0.16, 0.08, 0.04, 0.02};
  double t0 = 0.3;
  double dt = 1e-3;
  /// Regime bound |∂_t ḡ| <= C3 h.
  double C3 = 10.0;
};

enum class KineticMotion { Static, Translation, OscillatingBend };

/// Motions of a plate or cylinder patch: rigid rotation and translation
/// superposed on a normal oscillation of amplitude O(h); ℓ_k = h/2.
KineticFamily kinetic_family(const std::string& chart, KineticMotion motion, const FamilyOptions& options = {});

struct KineticComparison {
  double three_d = 0.0;
  double shell = 0.0;
};

/// Both kinetic energies for one member; throws RegimeViolation when the
/// C3 bound fails at a quadrature node.
KineticComparison kinetic_energies(const KineticFamily& family, double h, const AsymptoticSettings& settings = {});

ConvergenceReport kinetic_expansion_residual(const KineticFamily& family, const AsymptoticSettings& settings = {});

}  // namespace sgshell
