#include "sgshell/charts.hpp"

#include <cmath>
#include <numbers>

#include "sgshell/errors.hpp"

namespace sgshell {

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double param(const ChartParameters& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

}  // namespace

bool ParameterDomain::contains(const Eigen::Vector2d& theta, double tol) const {
  const double t = tol * std::max(1.0, extent());
  return theta[0] >= u0 - t && theta[0] <= u1 + t && theta[1] >= v0 - t && theta[1] <= v1 + t;
}

Chart Chart::analytic(std::string name, ParameterDomain domain, JetMap map) {
  Chart c;
  c.name_ = std::move(name);
  c.domain_ = domain;
  c.jet_map_ = std::move(map);
  return c;
}

Chart Chart::sampled(std::string name, ParameterDomain domain, PointMap map, double relative_step) {
  Chart c;
  c.name_ = std::move(name);
  c.domain_ = domain;
  c.point_map_ = std::move(map);
  c.relative_step_ = relative_step;
  return c;
}

void Chart::check_domain(const Eigen::Vector2d& theta) const {
  if (!domain_.contains(theta)) {
    throw Error(ErrorKind::OutOfDomain, "chart '" + name_ + "' queried outside its parameter rectangle");
  }
}

Eigen::Vector3d Chart::point(const Eigen::Vector2d& theta) const {
  check_domain(theta);
  if (is_analytic()) return values(jet_map_(Jet(theta[0]), Jet(theta[1])));
  return point_map_(theta[0], theta[1]);
}

Eigen::Vector3d Chart::fd_partial(const Eigen::Vector2d& theta, int i, int j, double step) const {
  auto eval = [&](double u, double v) -> Eigen::Vector3d {
    if (is_analytic()) return values(jet_map_(Jet(u), Jet(v)));
    return point_map_(u, v);
  };
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (int a = 0; a <= i; ++a) {
    const double wa = ((a % 2) ? -1.0 : 1.0) * binomial(i, a);
    const double du = (0.5 * i - a) * step;
    for (int b = 0; b <= j; ++b) {
      const double wb = ((b % 2) ? -1.0 : 1.0) * binomial(j, b);
      const double dv = (0.5 * j - b) * step;
      sum += wa * wb * eval(theta[0] + du, theta[1] + dv);
    }
  }
  return sum / std::pow(step, i + j);
}

Vec3J Chart::expand(const Eigen::Vector2d& theta, int order) const {
  check_domain(theta);
  if (order > max_order()) {
    throw Error(ErrorKind::InsufficientSmoothness, "chart '" + name_ + "' provides partials only up to order " +
                                                       std::to_string(max_order()));
  }
  if (is_analytic()) {
    return jet_map_(Jet::variable(0, theta[0], order), Jet::variable(1, theta[1], order));
  }
  Vec3J out = lift(Eigen::Vector3d::Zero(), order);
  const double step = fd_step();
  for (int d = 0; d <= order; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      const Eigen::Vector3d p = (d == 0) ? point_map_(theta[0], theta[1]) : fd_partial(theta, i, j, step);
      double fact = 1.0;
      for (int k = 2; k <= i; ++k) fact *= k;
      for (int k = 2; k <= j; ++k) fact *= k;
      for (int c = 0; c < 3; ++c) out[c].coeff(i, j) = p[c] / fact;
    }
  }
  return out;
}

Eigen::Vector3d Chart::partial(const Eigen::Vector2d& theta, int i, int j) const {
  const Vec3J x = expand(theta, i + j);
  return {x[0].partial(i, j), x[1].partial(i, j), x[2].partial(i, j)};
}

Chart Chart::transformed(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& shift) const {
  Chart c = *this;
  if (is_analytic()) {
    c.jet_map_ = [inner = jet_map_, rotation, shift](const Jet& u, const Jet& v) -> Vec3J {
      const Vec3J x = inner(u, v);
      Vec3J out;
      for (int i = 0; i < 3; ++i) out[i] = rotation(i, 0) * x[0] + rotation(i, 1) * x[1] + rotation(i, 2) * x[2] + shift[i];
      return out;
    };
  } else {
    c.point_map_ = [inner = point_map_, rotation, shift](double u, double v) -> Eigen::Vector3d {
      return rotation * inner(u, v) + shift;
    };
  }
  return c;
}

Chart Chart::displaced(JetMap displacement) const {
  Chart c = *this;
  if (is_analytic()) {
    c.jet_map_ = [inner = jet_map_, displacement](const Jet& u, const Jet& v) -> Vec3J {
      return inner(u, v) + displacement(u, v);
    };
  } else {
    c.point_map_ = [inner = point_map_, displacement](double u, double v) -> Eigen::Vector3d {
      return inner(u, v) + values(displacement(Jet::constant(u, 0), Jet::constant(v, 0)));
    };
  }
  return c;
}

Chart Chart::renamed(std::string name) const {
  Chart c = *this;
  c.name_ = std::move(name);
  return c;
}

ChartRegistry& ChartRegistry::instance() {
  static ChartRegistry registry;
  return registry;
}

ChartRegistry::ChartRegistry() {
  factories_["plate"] = [](const ChartParameters& p) {
    return charts::plate({param(p, "u0", 0.0), param(p, "u1", 1.0), param(p, "v0", 0.0), param(p, "v1", 1.0)});
  };
  factories_["cylinder"] = [](const ChartParameters& p) {
    return charts::cylinder(param(p, "R", 1.0), param(p, "L", 2.0), param(p, "half_angle", std::numbers::pi));
  };
  factories_["sphere"] = [](const ChartParameters& p) {
    return charts::sphere(param(p, "r", 1.0), param(p, "polar0", std::numbers::pi / 4),
                          param(p, "polar1", 3 * std::numbers::pi / 4), param(p, "az0", -std::numbers::pi / 4),
                          param(p, "az1", std::numbers::pi / 4));
  };
}

void ChartRegistry::add(const std::string& name, Factory factory) { factories_[name] = std::move(factory); }

bool ChartRegistry::contains(const std::string& name) const { return factories_.count(name) > 0; }

Chart ChartRegistry::make(const std::string& name, const ChartParameters& params) const {
  auto it = factories_.find(name);
  if (it == factories_.end()) throw Error(ErrorKind::ConfigError, "unknown chart '" + name + "'");
  return it->second(params);
}

std::vector<std::string> ChartRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, f] : factories_) out.push_back(name);
  return out;
}

namespace charts {

Chart plate(ParameterDomain domain) {
  return Chart::analytic("plate", domain, [](const Jet& u, const Jet& v) { return Vec3J(u, v, Jet(0.0)); });
}

Chart cylinder(double radius, double length, double half_angle) {
  ParameterDomain d{-radius * half_angle, radius * half_angle, 0.0, length};
  d.periodic_u = std::abs(half_angle - std::numbers::pi) < 1e-14;
  return Chart::analytic("cylinder", d, [radius](const Jet& u, const Jet& v) {
    const Jet angle = u / radius;
    return Vec3J(radius * cos(angle), radius * sin(angle), v);
  });
}

Chart sphere(double radius, double polar0, double polar1, double az0, double az1) {
  return Chart::analytic("sphere", {polar0, polar1, az0, az1}, [radius](const Jet& polar, const Jet& az) {
    const Jet s = sin(polar);
    return Vec3J(radius * s * cos(az), radius * s * sin(az), radius * cos(polar));
  });
}

}  // namespace charts

}  // namespace sgshell
