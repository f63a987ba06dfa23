#include "invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

#include "sgshell/asymptotics.hpp"
#include "sgshell/boundary.hpp"
#include "sgshell/closed_form.hpp"
#include "sgshell/equilibrium.hpp"
#include "sgshell/geometry.hpp"
#include "sgshell/kinematics.hpp"

namespace sgshell::testing {

namespace {

// Tracks the largest relative discrepancy seen in a suite.
struct Worst {
  double value = 0.0;
  std::string where;

  void relative(double a, double b, const std::string& what) {
    const double e = std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
    if (e > value) {
      value = e;
      where = what;
    }
  }
  template <class M>
  void relative_all(const M& a, const M& b, const std::string& what) {
    for (Eigen::Index i = 0; i < a.size(); ++i) relative(a.data()[i], b.data()[i], what);
  }
};

SuiteResult finish(std::string name, int cases, const Worst& w, double tol) {
  SuiteResult r;
  r.name = std::move(name);
  r.cases = cases;
  r.max_error = w.value;
  r.tolerance = tol;
  r.pass = w.value <= tol;
  r.detail = w.where;
  return r;
}

Tensor3 rotate(const Tensor3& t, const Eigen::Matrix3d& Q) {
  Tensor3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) s += Q(i, a) * Q(j, b) * Q(k, c) * t[a][b][c];
        out[i][j][k] = s;
      }
  return out;
}

Chart::JetMap random_field(Rng& rng, double amplitude) {
  std::array<Eigen::Vector3d, 3> dir;
  std::array<double, 3> ku{}, kv{}, phase{};
  for (int i = 0; i < 3; ++i) {
    dir[static_cast<size_t>(i)] = random_vector(rng, amplitude);
    ku[static_cast<size_t>(i)] = uniform(rng, -1.5, 1.5);
    kv[static_cast<size_t>(i)] = uniform(rng, -1.5, 1.5);
    phase[static_cast<size_t>(i)] = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  }
  return [=](const Jet& u, const Jet& v) {
    Vec3J out(Jet(0.0), Jet(0.0), Jet(0.0));
    for (size_t i = 0; i < 3; ++i) {
      const Jet s = sin(ku[i] * u + kv[i] * v + phase[i]);
      for (int c = 0; c < 3; ++c) out[c] += dir[i][c] * s;
    }
    return out;
  };
}

}  // namespace

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Eigen::Vector3d random_vector(Rng& rng, double scale) {
  return scale * Eigen::Vector3d(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
}

Eigen::Matrix3d random_rotation(Rng& rng) {
  Eigen::Quaterniond q(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
  q.normalize();
  return q.toRotationMatrix();
}

Chart random_reference(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: {
      const double u0 = uniform(rng, -0.5, 0.5), v0 = uniform(rng, -0.5, 0.5);
      return charts::plate({u0, u0 + uniform(rng, 0.5, 1.5), v0, v0 + uniform(rng, 0.5, 1.5)});
    }
    case 1: return charts::cylinder(uniform(rng, 0.7, 1.5), uniform(rng, 0.5, 2.0), uniform(rng, 0.3, 1.0));
    default: {
      const double p0 = uniform(rng, 0.5, 1.0);
      const double a0 = uniform(rng, -0.8, 0.0);
      return charts::sphere(uniform(rng, 0.8, 1.5), p0, p0 + uniform(rng, 0.5, 1.2), a0, a0 + uniform(rng, 0.5, 1.2));
    }
  }
}

Chart random_deformation(const Chart& reference, Rng& rng, double amplitude) {
  return reference.displaced(random_field(rng, amplitude))
      .transformed(random_rotation(rng), random_vector(rng))
      .renamed("random deformation");
}

Eigen::Vector2d random_point(const ParameterDomain& d, Rng& rng, double margin) {
  const double du = d.u1 - d.u0, dv = d.v1 - d.v0;
  return {uniform(rng, d.u0 + margin * du, d.u1 - margin * du), uniform(rng, d.v0 + margin * dv, d.v1 - margin * dv)};
}

MaterialParameters random_dilatational(Rng& rng) {
  MaterialParameters m;
  m.lambda = uniform(rng, 0.2, 3.0);
  m.mu = uniform(rng, 0.2, 3.0);
  m.h = uniform(rng, 0.02, 0.15);
  m.gradient = Dilatational{uniform(rng, 0.0, 1.0) * m.h};
  m.ell_k = uniform(rng, 0.0, 1.0) * m.h;
  m.rho_R = uniform(rng, 0.5, 2.0);
  return m;
}

MaterialParameters random_toupin_mindlin(Rng& rng) {
  MaterialParameters m = random_dilatational(rng);
  ToupinMindlin tm;
  for (double& a : tm.a) a = uniform(rng, 0.02, 0.3) * m.h * m.h;
  m.gradient = tm;
  return m;
}

SuiteResult frame_indifference_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  Worst w;
  for (int n = 0; n < cases; ++n) {
    const Chart ref = random_reference(rng);
    const Chart def = random_deformation(ref, rng, 0.08);
    const Eigen::Matrix3d Q = random_rotation(rng);
    const Chart moved = def.transformed(Q, random_vector(rng, 2.0));
    const Eigen::Vector2d theta = random_point(ref.domain(), rng);
    MaterialParameters mat = random_dilatational(rng);
    const MaterialParameters tm = random_toupin_mindlin(rng);

    const ShellJets a = shell_jets(ref, def, theta, mat.lambda, mat.mu, 4);
    const ShellJets b = shell_jets(ref, moved, theta, mat.lambda, mat.mu, 4);
    const KinematicState ka = kinematics_from(a.strain), kb = kinematics_from(b.strain);
    w.relative_all(ka.eps, kb.eps, "eps");
    w.relative_all(ka.rho, kb.rho, "rho");
    for (int c = 0; c < 2; ++c) {
      w.relative_all(ka.S[c], kb.S[c], "S");
      w.relative_all(ka.grad_eps[c], kb.grad_eps[c], "grad eps");
    }
    w.relative(koiter_density(ka, mat), koiter_density(kb, mat), "koiter");
    w.relative(w4_dilatational(ka, mat), w4_dilatational(kb, mat), "w4 dilatational");
    w.relative(w4_toupin_mindlin(ka, tm), w4_toupin_mindlin(kb, tm), "w4 toupin-mindlin");
    w.relative_all(Eigen::Vector3d(Q * values(a.directors.d)), values(b.directors.d), "d");
    w.relative_all(Eigen::Vector3d(Q * values(a.directors.g)), values(b.directors.g), "g");

    const StressResultants ra = values(resultant_jets(a.strain, mat));
    const StressResultants rb = values(resultant_jets(b.strain, mat));
    w.relative_all(ra.sigma, rb.sigma, "sigma");
    w.relative_all(ra.M, rb.M, "M");
    w.relative_all(Eigen::Vector3d(Q * ra.g), rb.g, "g body force");
    for (int c = 0; c < 2; ++c) w.relative_all(Eigen::Vector3d(Q * ra.T[c]), rb.T[c], "T");

    const double zeta = uniform(rng, -0.5, 0.5) * mat.h;
    const Recovered3D xa = recovered_3d_motion(a, zeta), xb = recovered_3d_motion(b, zeta);
    w.relative_all(xa.E, xb.E, "E");
    w.relative_all(Eigen::Matrix3d(Q * xa.F), xb.F, "F");
    w.relative(through_thickness_density(a, mat), through_thickness_density(b, mat), "3D density");
    mat.gradient = tm.gradient;
    w.relative(through_thickness_density(a, mat), through_thickness_density(b, mat), "3D density TM");
  }
  return finish("frame indifference", cases, w, 1e-10);
}

SuiteResult trace_identity_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  Worst w;
  for (int n = 0; n < cases; ++n) {
    const Chart ref = random_reference(rng);
    const Chart def = random_deformation(ref, rng, 0.1);
    const Eigen::Vector2d theta = random_point(ref.domain(), rng);
    const double lambda = uniform(rng, 0.2, 3.0), mu = uniform(rng, 0.2, 3.0);
    const KinematicState kin = kinematics_from(strain_jets(ref, def, theta, 3));
    const Tensor3 H = midsurface_strain_gradient(kin, lambda, mu);
    const double c = lambda / (lambda + 2.0 * mu);
    const Eigen::Vector3d N = kin.ref.normal;
    const Eigen::Vector3d t12 = 2.0 * mu / (lambda + 2.0 * mu) * (kin.grad_tr_eps_vector() - kin.tr_rho * N);
    const Eigen::Vector3d t23 = kin.div_eps_vector() + c * kin.tr_rho * N;
    w.relative_all(trace12(H), t12, "trace over (1,2)");
    w.relative_all(trace23(H), t23, "trace over (2,3)");
  }
  return finish("trace identities", cases, w, 1e-12);
}

SuiteResult metric_invariant_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  Worst w;
  const Eigen::Matrix2d I2 = Eigen::Matrix2d::Identity();
  for (int n = 0; n < cases; ++n) {
    const Chart ref = random_reference(rng);
    const Chart def = random_deformation(ref, rng, 0.1);
    const Eigen::Vector2d theta = random_point(ref.domain(), rng);
    for (const Chart* chart : {&ref, &def}) {
      const GeometryState g = geometry_at(*chart, theta);
      w.relative(g.normal.norm(), 1.0, "|N|");
      Eigen::Matrix2d duality;
      for (int a = 0; a < 2; ++a) {
        w.relative(g.normal.dot(g.basis[a]), 0.0, "N.A_a");
        for (int b = 0; b < 2; ++b) {
          duality(a, b) = g.dual_basis[a].dot(g.basis[b]);
          w.relative(g.metric(a, b), g.basis[a].dot(g.basis[b]), "metric");
        }
      }
      w.relative_all(duality, I2, "A^a.A_b");
      w.relative_all(Eigen::Matrix2d(g.dual_metric * g.metric), I2, "dual metric");
      w.relative(g.area_weight, g.basis[0].cross(g.basis[1]).norm(), "area");
      const Eigen::Matrix2d B = g.mixed_curvature();
      w.relative(g.mean, 0.5 * B.trace(), "H");
      w.relative(g.gauss, B.determinant(), "K");
    }
  }
  return finish("metric and normal invariants", cases, w, 1e-12);
}

SuiteResult balance_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  Worst w;
  for (int n = 0; n < cases; ++n) {
    Chart ref = charts::plate(), def = ref;
    MaterialParameters mat;
    if (n % 2 == 0) {
      const auto kind = static_cast<ExampleKind>(n / 2 % 3);
      const ExampleCase c = ExampleCase::random(kind, seed + static_cast<std::uint64_t>(n));
      ref = c.reference_chart();
      def = c.deformed_chart();
      mat = c.material;
    } else {
      ref = random_reference(rng);
      def = random_deformation(ref, rng, 0.08);
      mat = random_dilatational(rng);
    }
    const Boundary boundary = Boundary::of(ref.domain());
    const Eigen::Vector3d total = total_force_balance(ref, def, boundary, mat, 8, 2);
    w.relative(total.norm(), 0.0, "total force");
    Chart::JetMap u = random_field(rng, 1.0);
    if (ref.domain().periodic_u) {
      // The glued seam carries no boundary terms, so the field must be periodic.
      const double u0 = ref.domain().u0, period = ref.domain().u1 - ref.domain().u0;
      u = [f = u, u0, period](const Jet& a, const Jet& b) { return f(sin(2.0 * std::numbers::pi * (a - u0) / period), b); };
    }
    // A closed cylinder spans the full circumference, so it gets more panels.
    const int panels = ref.domain().periodic_u ? 6 : 2;
    const WeakFormBalance wf = weak_form_balance(ref, def, boundary, mat, u, 8, panels);
    // Both sides can vanish (pure bending against a membrane-type field), hence the floor.
    const double gap = std::abs(wf.internal - wf.external) / std::max({std::abs(wf.internal), std::abs(wf.external), 1e-9});
    if (gap > w.value) {
      w.value = gap;
      w.where = "weak form, case " + std::to_string(n) + " (" + ref.name() + ")";
    }
  }
  return finish("weak-form and total-force balance", cases, w, 1e-6);
}

SuiteResult isotropy_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  Worst w;
  for (int n = 0; n < cases; ++n) {
    const MaterialParameters tm = random_toupin_mindlin(rng);
    const MaterialParameters dil = random_dilatational(rng);
    Eigen::Matrix3d E = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) E(i, j) = E(j, i) = uniform(rng, -0.1, 0.1);
    Tensor3 G{};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        for (int k = 0; k < 3; ++k) G[i][j][k] = G[j][i][k] = uniform(rng, -1.0, 1.0);
    const Eigen::Matrix3d Q = random_rotation(rng);
    const double base = stored_3d_toupin_mindlin(E, G, tm);
    w.relative(base, stored_3d_toupin_mindlin(Q * E * Q.transpose(), rotate(G, Q), tm), "toupin-mindlin");

    const Eigen::Matrix3d F = Eigen::Matrix3d::Identity() + 0.1 * random_rotation(rng);
    const Eigen::Vector3d grad = random_vector(rng);
    const double wd = stored_3d_dilatational(F, grad, dil);
    w.relative(wd, stored_3d_dilatational(Q * F, grad, dil), "dilatational objectivity");
    w.relative(wd, stored_3d_dilatational(F * Q.transpose(), Q * grad, dil), "dilatational isotropy");
  }
  return finish("isotropy of the 3D energies", cases, w, 1e-10);
}

SuiteResult nonnegativity_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  Worst w;
  auto check = [&w](double v, const char* what) {
    if (-v > w.value) {
      w.value = -v;
      w.where = what;
    }
  };
  for (int n = 0; n < cases; ++n) {
    const Chart ref = random_reference(rng);
    const Chart def = random_deformation(ref, rng, 0.15);
    const Eigen::Vector2d theta = random_point(ref.domain(), rng);
    const MaterialParameters dil = random_dilatational(rng);
    const MaterialParameters tm = random_toupin_mindlin(rng);
    const KinematicState kin = kinematics_from(strain_jets(ref, def, theta, 3));
    check(koiter_density(kin, dil), "koiter");
    check(w4_dilatational(kin, dil), "w4 dilatational");
    if (ellipticity_report(tm).strongly_elliptic) check(w4_toupin_mindlin(kin, tm), "w4 toupin-mindlin");

    const double H = kin.ref.mean, K = kin.ref.gauss;
    if (kinetic_positive_definite(H, K, dil.h)) {
      Eigen::Matrix3d gv;
      for (int i = 0; i < 9; ++i) gv.data()[i] = uniform(rng, -1, 1);
      check(kinetic_shell_density(random_vector(rng), random_vector(rng), gv, H, K, dil), "kinetic");
    }
    Eigen::Matrix3d E = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) E(i, j) = E(j, i) = uniform(rng, -0.5, 0.5);
    check(stored_quadratic(E, dil.lambda, dil.mu), "stored quadratic");
  }
  return finish("nonnegativity of densities", cases, w, 0.0);
}

}  // namespace sgshell::testing
