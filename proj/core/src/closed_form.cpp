#include "sgshell/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sgshell/equilibrium.hpp"
#include "sgshell/errors.hpp"

namespace sgshell {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d e_r(double a) { return {std::cos(a), std::sin(a), 0.0}; }
Eigen::Vector3d e_theta(double a) { return {-std::sin(a), std::cos(a), 0.0}; }
const Eigen::Vector3d kAxis(0.0, 0.0, 1.0);

struct Moduli {
  double h, kappa, mu, lam, q4;
};

Moduli moduli(const ExampleCase& c) {
  const MaterialParameters& m = c.material;
  const double ell = m.dilatational().ell_s;
  const double s = m.lambda + 2.0 * m.mu;
  return {m.h, m.lambda * m.mu / s, m.mu, m.lambda, 4.0 * m.h * ell * ell * m.mu * m.mu * m.mu / (s * s)};
}

void check_edge(const ExampleCase& c, const std::string& e) {
  const bool z_edge = e == "v0" || e == "v1";
  const bool theta_edge = (e == "u0" || e == "u1") && c.kind == ExampleKind::RolledPlate;
  if (!z_edge && !theta_edge) throw Error(ErrorKind::ConfigError, "no edge named '" + e + "' in this example");
}

}  // namespace

std::string_view to_string(ExampleKind kind) {
  switch (kind) {
    case ExampleKind::RolledPlate: return "roll";
    case ExampleKind::ExtensionRadial: return "extend";
    case ExampleKind::Torsion: return "twist";
  }
  return "unknown";
}

ExampleKind parse_example_kind(const std::string& name) {
  if (name == "roll" || name == "RolledPlate" || name == "rolled-plate") return ExampleKind::RolledPlate;
  if (name == "extend" || name == "ExtensionRadial" || name == "extension") return ExampleKind::ExtensionRadial;
  if (name == "twist" || name == "Torsion" || name == "torsion") return ExampleKind::Torsion;
  throw Error(ErrorKind::ConfigError, "example: unknown kind '" + name + "' (expected roll, extend or twist)");
}

ExampleCase ExampleCase::defaults(ExampleKind kind) {
  ExampleCase c;
  c.kind = kind;
  c.material.lambda = 1.0;
  c.material.mu = 1.0;
  c.material.h = 0.1;
  c.material.gradient = Dilatational{0.05};
  return c;
}

ExampleCase ExampleCase::random(ExampleKind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  ExampleCase c = defaults(kind);
  c.material.lambda = draw(0.5, 2.0);
  c.material.mu = draw(0.5, 2.0);
  c.material.h = draw(0.05, 0.15);
  c.material.gradient = Dilatational{draw(0.0, 0.1)};
  c.R = draw(0.8, 1.5);
  c.L = draw(1.0, 3.0);
  c.gamma = draw(0.05, 0.3);
  c.eta = draw(0.7, 0.95);
  c.zeta = draw(1.0, 1.3);
  return c;
}

void ExampleCase::validate() const {
  auto positive = [](double v, const char* key) {
    if (!(v > 0.0)) throw Error(ErrorKind::ConfigError, std::string(key) + " must be positive");
  };
  positive(R, "R");
  positive(L, "L");
  positive(material.h, "h");
  positive(eta, "eta");
  positive(zeta, "zeta");
  material.dilatational();
}

Chart ExampleCase::reference_chart() const {
  if (kind == ExampleKind::RolledPlate) return charts::plate({-kPi * R, kPi * R, 0.0, L});
  return charts::cylinder(R, L);
}

Chart ExampleCase::deformed_chart() const {
  const ParameterDomain d = reference_chart().domain();
  const double r = R;
  switch (kind) {
    case ExampleKind::RolledPlate:
      return Chart::analytic("rolled-plate", d, [r](const Jet& u, const Jet& v) {
        const Jet a = u / r;
        return Vec3J(r * cos(a), r * sin(a), v);
      });
    case ExampleKind::ExtensionRadial:
      return Chart::analytic("extension-radial", d, [r, e = eta, z = zeta](const Jet& u, const Jet& v) {
        const Jet a = u / r;
        return Vec3J(e * r * cos(a), e * r * sin(a), z * v);
      });
    case ExampleKind::Torsion:
      return Chart::analytic("torsion", d, [r, g = gamma](const Jet& u, const Jet& v) {
        const Jet a = (u + g * v) / r;
        return Vec3J(r * cos(a), r * sin(a), v);
      });
  }
  throw Error(ErrorKind::ConfigError, "unknown example kind");
}

double ExampleSolution::angle(const Eigen::Vector2d& theta) const {
  if (c.kind == ExampleKind::Torsion) return (theta[0] + c.gamma * theta[1]) / c.R;
  return theta[0] / c.R;
}

Eigen::Vector3d ExampleSolution::g(const Eigen::Vector2d& theta) const { return g_radial * e_r(angle(theta)); }

std::array<Eigen::Vector3d, 2> ExampleSolution::T(const Eigen::Vector2d& theta) const {
  const double a = angle(theta), R = c.R;
  switch (c.kind) {
    case ExampleKind::RolledPlate:
      return {-M(0, 0) / R * e_theta(a), Eigen::Vector3d::Zero()};
    case ExampleKind::ExtensionRadial:
      return {(c.eta * N(0, 0) - M(0, 0) / R) * e_theta(a), c.zeta * N(1, 1) * kAxis};
    case ExampleKind::Torsion: {
      const double gm = c.gamma;
      return {(N(0, 0) + gm * N(1, 0) - (M(0, 0) + gm * M(0, 1)) / R) * e_theta(a) + N(1, 0) * kAxis,
              (N(0, 1) + gm * N(1, 1) - (M(1, 0) + gm * M(1, 1)) / R) * e_theta(a) + N(1, 1) * kAxis};
    }
  }
  return {};
}

Eigen::Vector3d ExampleSolution::literal_traction(const std::string& e, const Eigen::Vector2d& theta) const {
  check_edge(c, e);
  const auto t = T(theta);
  if (e == "v0") return -t[1];
  if (e == "v1") return t[1];
  if (e == "u0") return -t[0];
  return t[0];
}

ExampleEdgeValues ExampleSolution::edge(const std::string& e, const Eigen::Vector2d& theta) const {
  check_edge(c, e);
  const double a = angle(theta);
  const double sign = (e == "v0" || e == "u0") ? -1.0 : 1.0;
  ExampleEdgeValues out;
  if (e == "u0" || e == "u1") {
    out.t = sign * T(theta)[0];
    out.m = M(0, 0) * e_r(a);
    out.c = -sign * M(0, 0) * kAxis;
    return out;
  }
  out.t = literal_traction(e, theta);
  out.m = M(1, 1) * e_r(a);
  switch (c.kind) {
    case ExampleKind::RolledPlate:
      out.c = sign * M(1, 1) * e_theta(a);
      break;
    case ExampleKind::ExtensionRadial:
      out.c = sign * c.zeta * M(1, 1) * e_theta(a);
      break;
    case ExampleKind::Torsion:
      // The tangential moment M²¹ varies along the edge and contributes
      // -(𝐌^{αβ}ν_ατ_β)' to the traction.
      out.t -= sign * M(1, 0) / c.R * e_theta(a);
      out.c = sign * (M(1, 1) * e_theta(a) - c.gamma * M(1, 1) * kAxis);
      break;
  }
  return out;
}

std::vector<CornerForce> ExampleSolution::corner_forces() const {
  if (c.kind != ExampleKind::RolledPlate) return {};
  std::vector<CornerForce> out;
  const Boundary b = Boundary::rectangle(c.reference_chart().domain());
  for (const Corner& k : b.corners) {
    out.push_back({k.name, b.edges[static_cast<size_t>(k.edge_out)].start, Eigen::Vector3d::Zero()});
  }
  return out;
}

ExampleSolution rolled_plate_solution(const ExampleCase& c) {
  if (c.kind != ExampleKind::RolledPlate) throw Error(ErrorKind::ConfigError, "case is not a rolled plate");
  const Moduli m = moduli(c);
  const double h3 = m.h * m.h * m.h / 12.0;
  ExampleSolution s;
  s.c = c;
  s.M(0, 0) = -(h3 * (m.kappa + m.mu) + m.q4) / c.R;
  s.M(1, 1) = -(h3 * m.kappa + m.q4) / c.R;
  s.g_radial = -s.M(0, 0) / (c.R * c.R);
  return s;
}

double extension_N11(const ExampleCase& c, double eta, double zeta) {
  const Moduli m = moduli(c);
  return 2.0 * m.h * m.mu * (m.lam + m.mu) / (m.lam + 2.0 * m.mu) * (eta * eta - 1.0) +
         m.h * m.kappa * (zeta * zeta - 1.0);
}

double extension_M11(const ExampleCase& c, double eta) {
  const Moduli m = moduli(c);
  const double h3 = m.h * m.h * m.h;
  return (h3 * m.mu / 6.0 * (m.lam + m.mu) / (m.lam + 2.0 * m.mu) + m.q4) * (1.0 - eta) / c.R;
}

ExampleSolution extension_radial_solution(const ExampleCase& c) {
  if (c.kind != ExampleKind::ExtensionRadial) throw Error(ErrorKind::ConfigError, "case is not extension/radial");
  const Moduli m = moduli(c);
  const double h3 = m.h * m.h * m.h / 12.0;
  ExampleSolution s;
  s.c = c;
  s.N(0, 0) = extension_N11(c, c.eta, c.zeta);
  s.N(1, 1) = m.h * m.kappa * (c.eta * c.eta - 1.0) +
              2.0 * m.h * m.mu * (m.lam + m.mu) / (m.lam + 2.0 * m.mu) * (c.zeta * c.zeta - 1.0);
  s.sigma = s.N;
  s.M(0, 0) = extension_M11(c, c.eta);
  s.M(1, 1) = (h3 * m.kappa + m.q4) * (1.0 - c.eta) / c.R;
  s.g_radial = c.eta * s.N(0, 0) / c.R - s.M(0, 0) / (c.R * c.R);
  return s;
}

ExampleSolution torsion_solution(const ExampleCase& c) {
  if (c.kind != ExampleKind::Torsion) throw Error(ErrorKind::ConfigError, "case is not torsion");
  const Moduli m = moduli(c);
  const double h3 = m.h * m.h * m.h / 12.0;
  const double g = c.gamma, R = c.R;
  ExampleSolution s;
  s.c = c;
  s.N(0, 0) = m.h * g * g * m.kappa;
  s.N(0, 1) = s.N(1, 0) = m.h * g * m.mu;
  s.N(1, 1) = m.h * g * g * (m.kappa + m.mu);
  s.sigma = s.N;
  s.M(0, 0) = -g * g / R * (h3 * m.kappa + m.q4);
  s.M(0, 1) = s.M(1, 0) = -g / R * h3 * m.mu;
  s.M(1, 1) = -g * g / R * (h3 * (m.kappa + m.mu) + m.q4);
  s.g_radial = -(s.M(0, 0) + 2.0 * g * s.M(0, 1) + g * g * s.M(1, 1)) / (R * R) +
               (s.N(0, 0) + 2.0 * g * s.N(0, 1) + g * g * s.N(1, 1)) / R;
  return s;
}

ExampleSolution example_solution(const ExampleCase& c) {
  switch (c.kind) {
    case ExampleKind::RolledPlate: return rolled_plate_solution(c);
    case ExampleKind::ExtensionRadial: return extension_radial_solution(c);
    case ExampleKind::Torsion: return torsion_solution(c);
  }
  throw Error(ErrorKind::ConfigError, "unknown example kind");
}

ZetaSolve solve_zeta_for_eta(double eta, const ExampleCase& c) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw Error(ErrorKind::BracketFailure, "eta must lie in (0, 1), got " + std::to_string(eta));
  }
  constexpr double kZetaMax = 10.0;
  const double M11 = extension_M11(c, eta);
  // g·e_r = (η N¹¹ - M¹¹/R)/R, increasing in ζ.
  auto g_r = [&](double zeta) { return (eta * extension_N11(c, eta, zeta) - M11 / c.R) / c.R; };
  double lo = 1.0, hi = kZetaMax;
  double flo = g_r(lo), fhi = g_r(hi);
  if (flo * fhi > 0.0) {
    throw Error(ErrorKind::BracketFailure, "g.e_r has no sign change on [1, 10] for eta = " + std::to_string(eta));
  }
  ZetaSolve out;
  while (out.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = g_r(mid);
    ++out.iterations;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  out.zeta = 0.5 * (lo + hi);
  out.residual = g_r(out.zeta);
  return out;
}

std::vector<ComparisonRow> compare_with_pipeline(const ExampleCase& c, int samples, ComparisonTolerance tol) {
  c.validate();
  const ExampleSolution cf = example_solution(c);
  const Chart ref = c.reference_chart();
  const Chart def = c.deformed_chart();
  const MaterialParameters& mat = c.material;
  const ParameterDomain d = ref.domain();

  std::vector<ComparisonRow> rows;
  auto add = [&](const std::string& q, double expected, double got) {
    ComparisonRow r{q, expected, got, 0.0, true};
    const double diff = std::abs(expected - got);
    const double scale = std::max(std::abs(expected), std::abs(got));
    r.rel_error = scale > 0.0 ? diff / scale : 0.0;
    r.pass = diff <= std::max(tol.relative * scale, tol.absolute);
    rows.push_back(r);
  };
  auto add_vec = [&](const std::string& q, const Eigen::Vector3d& e, const Eigen::Vector3d& g) {
    for (int i = 0; i < 3; ++i) add(q + "[" + std::to_string(i) + "]", e[i], g[i]);
  };
  auto add_mat = [&](const std::string& q, const Eigen::Matrix2d& e, const Eigen::Matrix2d& g) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) add(q + std::to_string(i + 1) + std::to_string(j + 1), e(i, j), g(i, j));
  };

  for (int s = 0; s < samples; ++s) {
    const double fu = (s + 0.5) / samples, fv = (2.0 * s + 1.0) / (2.0 * samples + 1.0);
    const Eigen::Vector2d theta(d.u0 + fu * (d.u1 - d.u0), d.v0 + fv * (d.v1 - d.v0));
    const std::string at = "@" + std::to_string(s) + " ";
    const StressResultants r = stress_resultants_at(ref, def, theta, mat);
    add_mat(at + "sigma", cf.sigma, r.sigma);
    add_mat(at + "M", cf.M, r.M);
    for (int l = 0; l < 2; ++l) add_mat(at + "M" + std::to_string(l + 1), cf.MM[l], r.MM[l]);
    const auto T = cf.T(theta);
    add_vec(at + "T1", T[0], r.T[0]);
    add_vec(at + "T2", T[1], r.T[1]);
    add_vec(at + "g", cf.g(theta), r.g);
  }

  const Boundary b = Boundary::of(d);
  for (const BoundaryEdge& e : b.edges) {
    for (int s = 0; s < samples; ++s) {
      const double t = (s + 0.5) / samples;
      const Eigen::Vector2d theta = e.at(t);
      const EdgeLoads l = edge_loads_at(ref, def, e, t, mat);
      const ExampleEdgeValues v = cf.edge(e.name, theta);
      const std::string at = e.name + "@" + std::to_string(s) + " ";
      add_vec(at + "t", v.t, l.t);
      add_vec(at + "m", v.m, l.m);
      add_vec(at + "c", v.c, l.c);
    }
  }

  const auto numeric = corner_forces(ref, def, b, mat);
  const auto closed = cf.corner_forces();
  if (numeric.size() != closed.size()) throw Error(ErrorKind::TaskError, "corner lists differ");
  for (size_t i = 0; i < numeric.size(); ++i) add_vec("f_" + numeric[i].name, closed[i].f, numeric[i].f);
  return rows;
}

}  // namespace sgshell
