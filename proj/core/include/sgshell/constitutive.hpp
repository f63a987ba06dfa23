#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "sgshell/kinematics.hpp"
#include "sgshell/tensor_ops.hpp"

namespace sgshell {

/// Toupin–Mindlin gradient moduli a₁ … a₅.
struct ToupinMindlin {
  std::array<double, 5> a{};
};

/// Gradient of det F penalized with intrinsic length ℓ_s.
struct Dilatational {
  double ell_s = 0.0;
};

struct MaterialParameters {
  double lambda = 1.0;
  double mu = 1.0;
  /// monostate means no gradient term (classical material).
  std::variant<std::monostate, ToupinMindlin, Dilatational> gradient;
  double rho_R = 1.0;
  double ell_k = 0.0;
  double h = 0.1;
  double C1 = 1.0;

  double lame_ratio() const { return lambda / (lambda + 2.0 * mu); }
  const ToupinMindlin& toupin_mindlin() const;  // MissingModuli otherwise
  const Dilatational& dilatational() const;     // MissingModuli otherwise
};

double koiter_density(const Eigen::Matrix2d& eps, const Eigen::Matrix2d& rho, const Eigen::Matrix2d& dual_metric,
                      const MaterialParameters& mat);
double koiter_density(const KinematicState& kin, const MaterialParameters& mat);

double w4_toupin_mindlin(const KinematicState& kin, const MaterialParameters& mat);
double w4_dilatational(const KinematicState& kin, const MaterialParameters& mat);

/// W₄ of whichever gradient family the material carries; 0 for none.
double w4_density(const KinematicState& kin, const MaterialParameters& mat);

/// λ/2 (tr E)² + μ|E|².
double stored_quadratic(const Eigen::Matrix3d& E, double lambda, double mu);

/// Gradient part of the Toupin–Mindlin energy alone.
double toupin_mindlin_gradient_energy(const Tensor3& G, const std::array<double, 5>& a);

/// Throws SymmetryViolation unless E = Eᵀ and G_ijk = G_jik.
double stored_3d_toupin_mindlin(const Eigen::Matrix3d& E, const Tensor3& G, const MaterialParameters& mat);

/// Throws OrientationLoss unless det F > 0.
double stored_3d_dilatational(const Eigen::Matrix3d& F, const Eigen::Vector3d& grad_det_F,
                              const MaterialParameters& mat);

/// General kinetic shell density; grad_vy is the 3×3 tensor ∇_s ∂_t y.
double kinetic_shell_density(const Eigen::Vector3d& vy, const Eigen::Vector3d& vd, const Eigen::Matrix3d& grad_vy,
                             double H, double K, const MaterialParameters& mat);

/// Kinetic density with the leading-order director rate substituted.
/// Throws NonOrthogonalRate if |n·∂_t n| > 1e-8.
double kinetic_shell_density_specialized(const Eigen::Vector3d& vy, const Eigen::Vector3d& vn,
                                         const Eigen::Vector3d& n, double tr_eps_rate,
                                         const Eigen::Matrix3d& grad_vy, double H, double K,
                                         const MaterialParameters& mat);

bool kinetic_positive_definite(double H, double K, double h);

struct EllipticityReport {
  bool toupin_mindlin = false;
  double sum_a = 0.0;
  double a3_2a4_a5 = 0.0;
  double ell1_sq = 0.0;
  double ell2_sq = 0.0;
  double ell_s = 0.0;
  bool strongly_elliptic = true;
  std::vector<std::string> warnings;
};

/// Admissibility and length-scale report; never throws for bad moduli.
EllipticityReport ellipticity_report(const MaterialParameters& mat);

/// Warnings for ℓ_s, ℓ_k (or ℓ₁, ℓ₂) exceeding C₁h and for non-positive Lamé data.
std::vector<std::string> regime_warnings(const MaterialParameters& mat);

}  // namespace sgshell
