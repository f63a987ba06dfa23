#pragma once

#include <array>

#include <Eigen/Core>

#include "sgshell/charts.hpp"
#include "sgshell/geometry.hpp"
#include "sgshell/surface_fields.hpp"
#include "sgshell/tensor_ops.hpp"

namespace sgshell {

/// Deformation data at one parameter point; components are covariant with
/// respect to the reference basis unless stated otherwise.
struct KinematicState {
  GeometryState ref;
  std::array<Eigen::Vector3d, 2> cur_basis;  // y,α
  Eigen::Matrix2d a;                         // y,α·y,β
  Eigen::Matrix2d b;                         // n·y,αβ
  Eigen::Vector3d n;
  Eigen::Matrix2d eps;
  Eigen::Matrix2d rho;
  std::array<Eigen::Matrix2d, 2> S;     // [μ](α, β)
  Eigen::Vector2d grad_tr_eps;          // (tr ε),γ
  Eigen::Vector2d div_eps;              // A^{βγ} ε_{αβ|γ}
  std::array<Eigen::Matrix2d, 2> grad_eps;  // [γ](α, β) = ε_{αβ|γ}
  double tr_eps = 0.0;
  double tr_rho = 0.0;

  /// Cartesian vectors (·),γ A^γ and (·)_α A^α for the two gradients above.
  Eigen::Vector3d grad_tr_eps_vector() const;
  Eigen::Vector3d div_eps_vector() const;
};

struct DirectorState {
  double phi = 1.0;
  Eigen::Vector3d d;
  Eigen::Vector3d g;
  double E33 = 0.0;
};

KinematicState kinematics_at(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta);
KinematicState kinematics_from(const StrainJets& k);

/// Throws ThicknessCollapse if 1 + 2E₃₃ <= 0.
DirectorState directors_at(const KinematicState& kin, double lambda, double mu);

/// H̄ as a Cartesian 3×3×3 array.
Tensor3 midsurface_strain_gradient(const KinematicState& kin, double lambda, double mu);

/// Contractions of a 3-tensor over index pairs (1,2) and (2,3).
Eigen::Vector3d trace12(const Tensor3& t);
Eigen::Vector3d trace23(const Tensor3& t);

/// Strain and director jets at one point, kept together for the 3D
/// reconstruction. `order` is the order of the chart expansions.
struct ShellJets {
  StrainJets strain;
  DirectorJets directors;
  double lambda = 1.0;
  double mu = 1.0;
};

ShellJets shell_jets(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta, double lambda,
                     double mu, int order);
ShellJets shell_jets(const Vec3J& reference, const Vec3J& deformed, double lambda, double mu);

/// The reconstructed 3D motion χ̂ = y + ζd̄ + ζ²ḡ/2 at one normal-coordinate point.
struct Recovered3D {
  Eigen::Vector3d point;
  Eigen::Matrix3d F;
  Eigen::Matrix3d E;
  double det_F = 1.0;
  double volume_factor = 1.0;
  /// Spatial gradients; present only when the jets carry order >= 4.
  bool has_gradients = false;
  Tensor3 grad_E{};
  Eigen::Vector3d grad_det_F = Eigen::Vector3d::Zero();
};

/// Throws ShellSpaceViolation when μ_s <= 0 and OrientationLoss when det F <= 0.
Recovered3D recovered_3d_motion(const ShellJets& shell, double zeta);

Recovered3D recovered_3d_motion(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                                double zeta, double lambda, double mu);

}  // namespace sgshell
