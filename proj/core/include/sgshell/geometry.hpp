#pragma once

#include <array>
#include <functional>

#include <Eigen/Core>

#include "sgshell/charts.hpp"
#include "sgshell/surface_fields.hpp"

namespace sgshell {

/// Reference-surface data at one parameter point.
struct GeometryState {
  std::array<Eigen::Vector3d, 2> basis;       // A_α
  std::array<Eigen::Vector3d, 2> dual_basis;  // A^α
  Eigen::Matrix2d metric;                     // A_αβ
  Eigen::Matrix2d dual_metric;                // A^αβ
  Eigen::Vector3d normal;                     // N
  Eigen::Matrix2d curvature;                  // B_αβ = N·x,αβ
  std::array<Eigen::Matrix2d, 2> christoffel; // Γ̄^μ_αβ as [μ](α, β)
  double mean = 0.0;
  double gauss = 0.0;
  double area_weight = 0.0;  // √det A

  /// Mixed curvature B^α_β = A^αγ B_γβ.
  Eigen::Matrix2d mixed_curvature() const { return dual_metric * curvature; }
};

/// Throws OutOfDomain or DegenerateChart.
GeometryState geometry_from(const SurfaceJets& s);
GeometryState geometry_at(const Chart& chart, const Eigen::Vector2d& theta);

/// μ_s = 1 - 2Hζ + Kζ²; throws ShellSpaceViolation when μ_s <= 0.
double volume_factor(const GeometryState& geom, double zeta);

using SurfaceField = std::function<double(const Eigen::Vector2d&, const GeometryState&)>;

/// Tensor-product Gauss–Legendre integral of a field against dA over the
/// chart's parameter rectangle.
double surface_integral(const Chart& chart, const SurfaceField& field, int quadrature_order = 8);

/// Same, with `panels` equal subdivisions of each parameter direction.
double surface_integral(const Chart& chart, const SurfaceField& field, int quadrature_order, int panels);

/// Tensor-product nodes (θ, weight) over a rectangle, without the area weight.
struct ParameterNode {
  Eigen::Vector2d theta;
  double weight;
};
std::vector<ParameterNode> parameter_nodes(const ParameterDomain& domain, int quadrature_order, int panels = 1);

}  // namespace sgshell
