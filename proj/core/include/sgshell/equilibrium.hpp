#pragma once

#include <array>

#include <Eigen/Core>

#include "sgshell/charts.hpp"
#include "sgshell/constitutive.hpp"
#include "sgshell/surface_fields.hpp"

namespace sgshell {

/// Resultants of the dilatational shell energy as jets about one point.
///
/// With chart expansions of order p: σ, M, M^λστ and the N/M vectors have
/// order p-2, T^α has order p-3 and g has order p-4. Fields whose order
/// would be negative are left unset and flagged.
struct ResultantJets {
  Mat2J sigma;                        // σ^στ
  Mat2J M;                            // M^στ
  std::array<Mat2J, 2> MM;            // [λ](σ, τ) = M^λστ
  Mat2J N;                            // (β, α) = N^βα
  std::array<Jet, 2> Nn;              // N^α
  std::array<Vec3J, 2> Nvec;          // 𝐍^α
  std::array<std::array<Vec3J, 2>, 2> Mvec;  // 𝐌^αβ
  std::array<Vec3J, 2> T;
  Vec3J g;
  bool has_T = false;
  bool has_g = false;
};

/// Requires a Dilatational material (MissingModuli otherwise).
ResultantJets resultant_jets(const StrainJets& k, const MaterialParameters& mat);

struct StressResultants {
  Eigen::Matrix2d sigma;
  Eigen::Matrix2d M;
  std::array<Eigen::Matrix2d, 2> MM;
  Eigen::Matrix2d N;
  Eigen::Vector2d Nn;
  std::array<Eigen::Vector3d, 2> Nvec;
  std::array<std::array<Eigen::Vector3d, 2>, 2> Mvec;
  std::array<Eigen::Vector3d, 2> T;
  Eigen::Vector3d g;
  bool has_T = false;
  bool has_g = false;
};

StressResultants values(const ResultantJets& r);

/// Resultants at θ using the highest derivative order both charts provide
/// (capped at 4, enough for g).
StressResultants stress_resultants_at(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                                      const MaterialParameters& mat);

/// Throw InsufficientSmoothness when the charts cannot supply the derivatives.
std::array<Eigen::Vector3d, 2> t_vectors_at(const Chart& reference, const Chart& deformed,
                                            const Eigen::Vector2d& theta, const MaterialParameters& mat);
Eigen::Vector3d body_force_at(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                              const MaterialParameters& mat);

/// Dilatational shell energy density Koiter + W₄ at θ.
double shell_energy_density(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                            const MaterialParameters& mat);

}  // namespace sgshell
