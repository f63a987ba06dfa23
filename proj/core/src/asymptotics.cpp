#include "sgshell/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Geometry>

#include "sgshell/errors.hpp"
#include "sgshell/geometry.hpp"
#include "sgshell/quadrature.hpp"

namespace sgshell {

namespace {

Eigen::Matrix3d outer(const Eigen::Vector3d& a, const Eigen::Vector3d& b) { return a * b.transpose(); }

// Sum of v_α ⊗ A^α over the two tangent directions.
Eigen::Matrix3d surface_gradient(const std::array<Eigen::Vector3d, 2>& v, const GeometryState& g) {
  return outer(v[0], g.dual_basis[0]) + outer(v[1], g.dual_basis[1]);
}

// v_α ⊗ A^α composed with the mixed tensor M^α_β A_α ⊗ A^β, i.e. v_α M^α_β ⊗ A^β.
Eigen::Matrix3d surface_gradient_times(const std::array<Eigen::Vector3d, 2>& v, const Eigen::Matrix2d& mixed,
                                       const GeometryState& g) {
  Eigen::Matrix3d out = Eigen::Matrix3d::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out += mixed(a, b) * outer(v[a], g.dual_basis[b]);
  return out;
}

Eigen::Matrix3d elastic_stress(const Eigen::Matrix3d& E, double lambda, double mu) {
  return lambda * E.trace() * Eigen::Matrix3d::Identity() + 2.0 * mu * E;
}

double stored_3d(const Recovered3D& r, const MaterialParameters& mat) {
  if (std::holds_alternative<ToupinMindlin>(mat.gradient)) return stored_3d_toupin_mindlin(r.E, r.grad_E, mat);
  if (std::holds_alternative<Dilatational>(mat.gradient)) return stored_3d_dilatational(r.F, r.grad_det_F, mat);
  return stored_quadratic(r.E, mat.lambda, mat.mu);
}

bool needs_gradients(const MaterialParameters& mat) { return !std::holds_alternative<std::monostate>(mat.gradient); }

double koiter_scaled(const KinematicState& kin, const MaterialParameters& mat, double bending_scale) {
  const double total = koiter_density(kin, mat);
  if (bending_scale == 1.0) return total;
  const double membrane = koiter_density(kin.eps, Eigen::Matrix2d::Zero(), kin.ref.dual_metric, mat);
  return membrane + bending_scale * (total - membrane);
}

double strain_norm(const KinematicState& kin) {
  const Eigen::Matrix2d up = raise(kin.ref.dual_metric, kin.eps);
  return std::sqrt(std::max(0.0, contract(up, kin.eps)));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Vec3J apply(const Eigen::Matrix3d& Q, const Vec3J& v) {
  Vec3J out;
  for (int i = 0; i < 3; ++i) out[i] = Q(i, 0) * v[0] + Q(i, 1) * v[1] + Q(i, 2) * v[2];
  return out;
}

Vec3J displacement_field(const Jet& u, const Jet& v) {
  return Vec3J(0.3 * sin(u + 0.5 * v), 0.2 * v * cos(u), 0.25 * u * v + 0.1 * sin(2.0 * v));
}

struct ReferenceShape {
  Chart chart;
  std::function<Vec3J(const Jet&, const Jet&)> position;
  std::function<Vec3J(const Jet&, const Jet&)> normal;
};

ReferenceShape reference_shape(const std::string& name) {
  if (name == "plate") {
    return {charts::plate({0.0, 1.0, 0.0, 1.0}), [](const Jet& u, const Jet& v) { return Vec3J(u, v, Jet(0.0)); },
            [](const Jet&, const Jet&) { return Vec3J(Jet(0.0), Jet(0.0), Jet(1.0)); }};
  }
  if (name == "cylinder") {
    return {charts::cylinder(1.0, 1.0, 0.5), [](const Jet& u, const Jet& v) { return Vec3J(cos(u), sin(u), v); },
            [](const Jet& u, const Jet&) { return Vec3J(cos(u), sin(u), Jet(0.0)); }};
  }
  throw Error(ErrorKind::ConfigError, "unknown family chart '" + name + "' (expected plate or cylinder)");
}

// Fourth-order central difference from samples at t0 + k dt, k = -2 .. 2.
template <class T>
T central_rate(const std::array<T, 5>& f, double dt) {
  return (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * dt);
}

}  // namespace

ScalingFamily scaling_family(const std::string& chart, GradientModel model, const FamilyOptions& options) {
  ScalingFamily f;
  const double amp = options.amplitude;
  if (chart == "plate") {
    f.reference = charts::plate({0.0, 1.0, 0.0, 1.0});
    f.deformed = [amp](double h) {
      return Chart::analytic("rolled plate", {0.0, 1.0, 0.0, 1.0}, [h, amp](const Jet& u, const Jet& v) {
        const Vec3J base(sin(u), v, 1.0 - cos(u));
        return Vec3J(base + (h * amp) * displacement_field(u, v));
      });
    };
  } else if (chart == "cylinder") {
    f.reference = charts::cylinder(1.0, 1.0, 0.5);
    const ParameterDomain d = f.reference.domain();
    f.deformed = [amp, d](double h) {
      return Chart::analytic("rerolled cylinder", d, [h, amp](const Jet& u, const Jet& v) {
        const Jet angle = u / 1.5;
        const Vec3J base(1.5 * cos(angle), 1.5 * sin(angle), v);
        return Vec3J(base + (h * amp) * displacement_field(u, v));
      });
    };
  } else {
    throw Error(ErrorKind::ConfigError, "unknown family chart '" + chart + "' (expected plate or cylinder)");
  }

  const char* suffix = model == GradientModel::ToupinMindlin  ? "toupin-mindlin"
                       : model == GradientModel::Dilatational ? "dilatational"
                                                              : "koiter";
  f.name = chart + "/" + suffix;
  f.h_grid = options.h_grid;
  f.material = [options, model](double h) {
    MaterialParameters m;
    m.lambda = options.lambda;
    m.mu = options.mu;
    m.h = h;
    const double ell = options.ell_ratio * h;
    if (model == GradientModel::Dilatational) m.gradient = Dilatational{ell};
    if (model == GradientModel::ToupinMindlin) {
      ToupinMindlin tm;
      for (size_t j = 0; j < 5; ++j) tm.a[j] = options.tm_coefficients[j] * ell * ell;
      m.gradient = tm;
    }
    return m;
  };
  return f;
}

ConvergenceReport fit_convergence(std::string name, const std::vector<double>& h, const std::vector<double>& residual,
                                  double target) {
  ConvergenceReport r;
  r.name = std::move(name);
  r.h = h;
  r.residual = residual;
  r.target = target;
  const size_t n = h.size();
  if (n != residual.size() || n < 3) {
    throw Error(ErrorKind::ConfigError, "a convergence fit needs at least three (h, residual) pairs");
  }
  r.local_slope.assign(n, std::numeric_limits<double>::quiet_NaN());
  for (size_t i = 1; i < n; ++i) {
    r.local_slope[i] = std::log(residual[i] / residual[i - 1]) / std::log(h[i] / h[i - 1]);
  }
  Eigen::MatrixXd A(static_cast<Eigen::Index>(n), 2);
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    A(k, 0) = std::log(h[i]);
    A(k, 1) = 1.0;
    b(k) = std::log(residual[i]);
  }
  const Eigen::Vector2d x = A.colPivHouseholderQr().solve(b);
  r.slope = x[0];
  r.intercept = x[1];
  r.pass = std::isfinite(r.slope) && r.slope >= target;
  return r;
}

double through_thickness_density(const ShellJets& shell, const MaterialParameters& mat, int zeta_order) {
  const QuadratureRule rule = gauss_legendre(zeta_order, -0.5 * mat.h, 0.5 * mat.h);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const Recovered3D r = recovered_3d_motion(shell, rule.nodes[i]);
    if (needs_gradients(mat) && !r.has_gradients) {
      throw Error(ErrorKind::InsufficientSmoothness, "gradient energies need fourth partials of the charts");
    }
    sum += rule.weights[i] * stored_3d(r, mat) * r.volume_factor;
  }
  return sum;
}

double through_thickness_energy(const Chart& reference, const Chart& deformed, const MaterialParameters& mat,
                                const AsymptoticSettings& settings) {
  const int order = needs_gradients(mat) ? 4 : 3;
  double sum = 0.0;
  for (const auto& node : parameter_nodes(reference.domain(), settings.quadrature_order, settings.panels)) {
    const ShellJets s = shell_jets(reference, deformed, node.theta, mat.lambda, mat.mu, order);
    const GeometryState g = geometry_from(s.strain.ref);
    sum += node.weight * g.area_weight * through_thickness_density(s, mat, settings.zeta_order);
  }
  return sum;
}

ThreeTermEnergy classical_three_term_energy(const ShellJets& shell, const MaterialParameters& mat) {
  const GeometryState g = geometry_from(shell.strain.ref);
  const Eigen::Vector3d N = g.normal;
  const std::array<Eigen::Vector3d, 2> y_a{values(shell.strain.cur.basis[0]), values(shell.strain.cur.basis[1])};
  const std::array<Eigen::Vector3d, 2> d_a{values(derivative(shell.directors.d, 0)),
                                           values(derivative(shell.directors.d, 1))};
  const Eigen::Vector3d d = values(shell.directors.d);
  const Eigen::Vector3d gbar = values(shell.directors.g);
  const Eigen::Matrix2d B = g.mixed_curvature();

  const Eigen::Matrix3d grad_y = surface_gradient(y_a, g);
  const Eigen::Matrix3d grad_d = surface_gradient(d_a, g);
  const Eigen::Matrix3d grad_y_B = surface_gradient_times(y_a, B, g);
  const Eigen::Matrix3d grad_y_BB = surface_gradient_times(y_a, B * B, g);
  const Eigen::Matrix3d grad_d_B = surface_gradient_times(d_a, B, g);

  const Eigen::Matrix3d F = grad_y + outer(d, N);
  const Eigen::Matrix3d E = 0.5 * (F.transpose() * F - Eigen::Matrix3d::Identity());
  const Eigen::Matrix3d S = elastic_stress(E, mat.lambda, mat.mu);

  const Eigen::Matrix3d K = grad_d + grad_y_B + outer(gbar, N);
  const Eigen::Matrix3d FK = F.transpose() * K;
  const Eigen::Matrix3d sym = 0.5 * (FK + FK.transpose());
  const Eigen::Matrix3d MK = K * S + F * (mat.lambda * sym.trace() * Eigen::Matrix3d::Identity() + 2.0 * mat.mu * sym);

  const Eigen::Matrix3d P = F * S;
  const Eigen::Matrix3d tangential = Eigen::Matrix3d::Identity() - outer(N, N);
  const Eigen::Matrix3d W3_arg = grad_d_B + grad_y_BB - 2.0 * g.mean * (grad_d + grad_y_B);

  const double h = mat.h, h3 = h * h * h;
  ThreeTermEnergy out;
  out.W1 = h * stored_quadratic(E, mat.lambda, mat.mu);
  out.W2 = h3 / 24.0 * (K.array() * MK.array()).sum();
  out.W3 = h3 / 12.0 * ((P * tangential).array() * W3_arg.array()).sum();
  return out;
}

ThreeTermEnergy classical_three_term_energy(const Chart& reference, const Chart& deformed,
                                            const Eigen::Vector2d& theta, const MaterialParameters& mat) {
  return classical_three_term_energy(shell_jets(reference, deformed, theta, mat.lambda, mat.mu, 3), mat);
}

ConvergenceReport expansion_residual(const ScalingFamily& family, ShellDensity density,
                                     const AsymptoticSettings& settings) {
  std::vector<double> residuals;
  const auto nodes = parameter_nodes(family.reference.domain(), settings.quadrature_order, settings.panels);
  for (double h : family.h_grid) {
    const MaterialParameters mat = family.material(h);
    const Chart deformed = family.deformed(h);
    const int order = needs_gradients(mat) && density != ShellDensity::ThreeTerm ? 4 : 3;
    double diff = 0.0;
    for (const auto& node : nodes) {
      const ShellJets s = shell_jets(family.reference, deformed, node.theta, mat.lambda, mat.mu, order);
      const KinematicState kin = kinematics_from(s.strain);
      if (strain_norm(kin) > family.C2 * h) {
        throw Error(ErrorKind::RegimeViolation, family.name + ": |eps| = " + fmt(strain_norm(kin)) +
                                                    " exceeds C2 h = " + fmt(family.C2 * h));
      }
      double local = 0.0;
      switch (density) {
        case ShellDensity::KoiterPlusW4:
          local = through_thickness_density(s, mat, settings.zeta_order) - koiter_scaled(kin, mat, settings.bending_scale) -
                  w4_density(kin, mat);
          break;
        case ShellDensity::Koiter:
          local = through_thickness_density(s, mat, settings.zeta_order) - koiter_scaled(kin, mat, settings.bending_scale);
          break;
        case ShellDensity::ThreeTerm: {
          const ThreeTermEnergy w = classical_three_term_energy(s, mat);
          local = (1.0 + h * h * kin.ref.gauss / 12.0) * w.W1 + w.W2 + w.W3 - koiter_scaled(kin, mat, settings.bending_scale);
          break;
        }
      }
      diff += node.weight * kin.ref.area_weight * local;
    }
    residuals.push_back(std::abs(diff));
  }
  const char* tag = density == ShellDensity::KoiterPlusW4 ? "koiter+w4"
                    : density == ShellDensity::Koiter     ? "koiter"
                                                          : "three-term";
  return fit_convergence(family.name + "/" + tag, family.h_grid, residuals, settings.target_slope);
}

KineticFamily kinetic_family(const std::string& chart, KineticMotion motion, const FamilyOptions& options) {
  const ReferenceShape shape = reference_shape(chart);
  KineticFamily f;
  f.reference = shape.chart;
  f.h_grid = options.h_grid;
  const ParameterDomain d = shape.chart.domain();
  const double amp = options.amplitude;
  const Eigen::Vector3d velocity(0.3, -0.2, 0.5);
  const Eigen::Vector3d axis = Eigen::Vector3d(1.0, 2.0, 2.0).normalized();
  constexpr double omega = 0.7, Omega = 2.0;

  switch (motion) {
    case KineticMotion::Static:
      f.name = chart + "/static";
      f.deformed = [shape, d](double, double) { return Chart::analytic("static", d, shape.position); };
      break;
    case KineticMotion::Translation:
      f.name = chart + "/translation";
      f.deformed = [shape, d, velocity](double, double t) {
        return Chart::analytic("translated", d, [shape, velocity, t](const Jet& u, const Jet& v) {
          return Vec3J(shape.position(u, v) + lift(t * velocity));
        });
      };
      break;
    case KineticMotion::OscillatingBend:
      f.name = chart + "/oscillating-bend";
      f.deformed = [shape, d, velocity, axis, amp](double h, double t) {
        const Eigen::Matrix3d Q = Eigen::AngleAxisd(omega * t, axis).toRotationMatrix();
        const double s = h * amp * std::sin(Omega * t);
        return Chart::analytic("oscillating", d, [shape, Q, s, velocity, t](const Jet& u, const Jet& v) {
          const Jet w = sin(u + 0.7 * v) + 0.5 * u * v;
          const Vec3J bent = shape.position(u, v) + (s * w) * shape.normal(u, v);
          return Vec3J(apply(Q, bent) + lift(t * velocity));
        });
      };
      break;
  }
  f.material = [options](double h) {
    MaterialParameters m;
    m.lambda = options.lambda;
    m.mu = options.mu;
    m.h = h;
    m.rho_R = 1.0;
    m.ell_k = 0.5 * h;
    return m;
  };
  return f;
}

KineticComparison kinetic_energies(const KineticFamily& family, double h, const AsymptoticSettings& settings) {
  const MaterialParameters mat = family.material(h);
  std::array<Chart, 5> motion{family.deformed(h, family.t0 - 2.0 * family.dt),
                              family.deformed(h, family.t0 - family.dt), family.deformed(h, family.t0),
                              family.deformed(h, family.t0 + family.dt),
                              family.deformed(h, family.t0 + 2.0 * family.dt)};
  const QuadratureRule zeta = gauss_legendre(settings.zeta_order, -0.5 * h, 0.5 * h);

  KineticComparison out;
  for (const auto& node : parameter_nodes(family.reference.domain(), settings.quadrature_order, settings.panels)) {
    std::array<ShellJets, 5> s;
    for (size_t k = 0; k < 5; ++k) s[k] = shell_jets(family.reference, motion[k], node.theta, mat.lambda, mat.mu, 3);
    const GeometryState g = geometry_from(s[2].strain.ref);

    auto rate = [&](auto&& pick) {
      std::array<Eigen::Vector3d, 5> f;
      for (size_t k = 0; k < 5; ++k) f[k] = pick(s[k]);
      return central_rate(f, family.dt);
    };
    const Eigen::Vector3d vy = rate([](const ShellJets& x) { return values(x.strain.cur.position); });
    const Eigen::Vector3d vd = rate([](const ShellJets& x) { return values(x.directors.d); });
    const Eigen::Vector3d vg = rate([](const ShellJets& x) { return values(x.directors.g); });
    const std::array<Eigen::Vector3d, 2> vy_a{rate([](const ShellJets& x) { return values(x.strain.cur.basis[0]); }),
                                              rate([](const ShellJets& x) { return values(x.strain.cur.basis[1]); })};
    if (vg.norm() > family.C3 * h) {
      throw Error(ErrorKind::RegimeViolation,
                  family.name + ": |d/dt g| = " + fmt(vg.norm()) + " exceeds C3 h = " + fmt(family.C3 * h));
    }
    const double shell = kinetic_shell_density(vy, vd, surface_gradient(vy_a, g), g.mean, g.gauss, mat);

    double bulk = 0.0;
    for (size_t i = 0; i < zeta.nodes.size(); ++i) {
      std::array<Recovered3D, 5> r;
      for (size_t k = 0; k < 5; ++k) r[k] = recovered_3d_motion(s[k], zeta.nodes[i]);
      std::array<Eigen::Vector3d, 5> p;
      std::array<Eigen::Matrix3d, 5> F;
      for (size_t k = 0; k < 5; ++k) {
        p[k] = r[k].point;
        F[k] = r[k].F;
      }
      const Eigen::Vector3d v = central_rate(p, family.dt);
      const Eigen::Matrix3d L = central_rate(F, family.dt) * r[2].F.inverse();
      const double kappa = 0.5 * mat.rho_R * (v.squaredNorm() + mat.ell_k * mat.ell_k * L.squaredNorm());
      bulk += zeta.weights[i] * kappa * r[2].volume_factor;
    }
    out.three_d += node.weight * g.area_weight * bulk;
    out.shell += node.weight * g.area_weight * shell;
  }
  return out;
}

ConvergenceReport kinetic_expansion_residual(const KineticFamily& family, const AsymptoticSettings& settings) {
  std::vector<double> residuals;
  for (double h : family.h_grid) {
    const KineticComparison k = kinetic_energies(family, h, settings);
    residuals.push_back(std::abs(k.three_d - k.shell));
  }
  return fit_convergence(family.name + "/kinetic", family.h_grid, residuals, settings.target_slope);
}

}  // namespace sgshell
