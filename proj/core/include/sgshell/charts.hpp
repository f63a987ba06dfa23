#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sgshell/jet.hpp"

namespace sgshell {

/// Closed parameter rectangle [u0, u1] x [v0, v1].
struct ParameterDomain {
  double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
  /// The u-edges are glued (closed cylinder); they are not boundary.
  bool periodic_u = false;

  double extent() const { return std::max(u1 - u0, v1 - v0); }
  bool contains(const Eigen::Vector2d& theta, double tol = 1e-12) const;
  bool operator==(const ParameterDomain&) const = default;
};

/// A parameterized surface patch θ -> x(θ) in 3-space.
///
/// Analytic charts are written once against Jet and therefore deliver exact
/// partials of every order up to Jet::kMaxOrder. Sampled charts only provide
/// point values; their partials come from nested central differences and are
/// available up to total order 3.
class Chart {
 public:
  using JetMap = std::function<Vec3J(const Jet&, const Jet&)>;
  using PointMap = std::function<Eigen::Vector3d(double, double)>;

  static constexpr int kSampledMaxOrder = 3;
  static constexpr double kDefaultRelativeStep = 1e-4;

  static Chart analytic(std::string name, ParameterDomain domain, JetMap map);
  static Chart sampled(std::string name, ParameterDomain domain, PointMap map,
                       double relative_step = kDefaultRelativeStep);

  const std::string& name() const { return name_; }
  const ParameterDomain& domain() const { return domain_; }
  bool is_analytic() const { return static_cast<bool>(jet_map_); }
  int max_order() const { return is_analytic() ? Jet::kMaxOrder : kSampledMaxOrder; }
  double fd_step() const { return relative_step_ * domain_.extent(); }

  Eigen::Vector3d point(const Eigen::Vector2d& theta) const;

  /// Taylor expansion of the chart about theta, to the requested order.
  Vec3J expand(const Eigen::Vector2d& theta, int order) const;

  /// ∂₁^i ∂₂^j x at theta.
  Eigen::Vector3d partial(const Eigen::Vector2d& theta, int i, int j) const;

  /// Nested central-difference partial with an explicit step, regardless of
  /// whether the chart is analytic. Exposed for convergence studies.
  Eigen::Vector3d fd_partial(const Eigen::Vector2d& theta, int i, int j, double step) const;

  /// Image under the rigid motion x -> Q x + c.
  Chart transformed(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& shift) const;

  /// x + u(θ); the displacement is evaluated with jets, so analytic charts stay analytic.
  Chart displaced(JetMap displacement) const;

  /// Same map, different name/domain bookkeeping.
  Chart renamed(std::string name) const;

 private:
  void check_domain(const Eigen::Vector2d& theta) const;

  std::string name_;
  ParameterDomain domain_;
  JetMap jet_map_;
  PointMap point_map_;
  double relative_step_ = kDefaultRelativeStep;
};

using ChartParameters = std::map<std::string, double>;

/// Built-in and user charts selectable by name.
class ChartRegistry {
 public:
  using Factory = std::function<Chart(const ChartParameters&)>;

  static ChartRegistry& instance();

  /// Registration hook for user charts; replaces an existing entry of the same name.
  void add(const std::string& name, Factory factory);
  bool contains(const std::string& name) const;
  Chart make(const std::string& name, const ChartParameters& params = {}) const;
  std::vector<std::string> names() const;

 private:
  ChartRegistry();
  std::map<std::string, Factory> factories_;
};

namespace charts {

/// x = θ¹ e₁ + θ² e₂ on the given rectangle.
Chart plate(ParameterDomain domain = {});

/// x = R e_r(θ¹/R) + θ² k with θ¹ ∈ [-R·half_angle, R·half_angle], θ² ∈ [0, L].
/// half_angle = π gives the closed cylinder (periodic in θ¹).
Chart cylinder(double radius, double length, double half_angle = 3.14159265358979323846);

/// Sphere of the given radius, polar angle in [polar0, polar1], azimuth in [az0, az1].
/// The normal A₁ × A₂ points outward, so H = -1/r and K = 1/r².
Chart sphere(double radius, double polar0, double polar1, double az0, double az1);

}  // namespace charts

}  // namespace sgshell
