#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "sgshell/charts.hpp"
#include "sgshell/constitutive.hpp"

namespace sgshell {

/// Straight segment of the parameter rectangle's boundary, traversed so
/// that the domain lies to the left (counterclockwise).
struct BoundaryEdge {
  std::string name;
  Eigen::Vector2d start;
  Eigen::Vector2d end;
  /// Index of the edge that continues this one, or -1 for an open end.
  int next = -1;

  Eigen::Vector2d direction() const { return end - start; }
  Eigen::Vector2d at(double t) const { return start + t * (end - start); }
};

/// A junction between two edges where the tangent may jump.
struct Corner {
  std::string name;
  int edge_in;
  int edge_out;
};

struct Boundary {
  std::vector<BoundaryEdge> edges;
  std::vector<Corner> corners;

  /// Four edges and four corners of a plain rectangle.
  static Boundary rectangle(const ParameterDomain& domain);
  /// The two v-edges of a domain glued in u; no corners.
  static Boundary periodic(const ParameterDomain& domain);
  /// Whichever of the two above matches the domain.
  static Boundary of(const ParameterDomain& domain);
};

struct BoundaryFrame {
  Eigen::Vector3d tau;
  Eigen::Vector3d nu;
  Eigen::Vector2d tau_cov;  // τ·A_α
  Eigen::Vector2d nu_cov;   // ν·A_α
  double ds_dt = 0.0;       // arclength per unit edge parameter
};

struct EdgeLoads {
  BoundaryFrame frame;
  Eigen::Vector3d t;
  Eigen::Vector3d m;
  Eigen::Vector3d c;
  /// 𝐌^{αβ}ν_ατ_β, whose jumps give the corner forces.
  Eigen::Vector3d M_nu_tau;
};

BoundaryFrame boundary_frame(const Chart& reference, const BoundaryEdge& edge, double t);

/// Edge traction, double force and couple at parameter t ∈ [0, 1] of the edge.
EdgeLoads edge_loads_at(const Chart& reference, const Chart& deformed, const BoundaryEdge& edge, double t,
                        const MaterialParameters& mat);

struct CornerForce {
  std::string name;
  Eigen::Vector2d theta;
  Eigen::Vector3d f;
};

/// f_i = -(𝐌ντ after the corner - 𝐌ντ before it). Throws CornerUndeclared if
/// the tangent jumps by more than 1e-6 at a junction not listed as a corner.
std::vector<CornerForce> corner_forces(const Chart& reference, const Chart& deformed, const Boundary& boundary,
                                       const MaterialParameters& mat);

/// Checks tangent continuity at every junction that is not a declared corner.
void validate_corners(const Chart& reference, const Boundary& boundary);

/// ∫_Ω g dA + ∫_∂Ω t ds + Σ f_i.
Eigen::Vector3d total_force_balance(const Chart& reference, const Chart& deformed, const Boundary& boundary,
                                    const MaterialParameters& mat, int quadrature_order = 8, int panels = 2);

struct WeakFormBalance {
  double internal = 0.0;  // ∫ 𝐍^α·u,α + 𝐌^{αβ}·u_|αβ dA
  double external = 0.0;  // ∫ g·u dA + ∫ (t·u + m·u_ν) ds + Σ f_i·u_i
  double relative_gap() const;
};

/// Both sides of the virtual-work identity for a smooth virtual field u.
WeakFormBalance weak_form_balance(const Chart& reference, const Chart& deformed, const Boundary& boundary,
                                  const MaterialParameters& mat, const Chart::JetMap& virtual_field,
                                  int quadrature_order = 8, int panels = 2);

}  // namespace sgshell
