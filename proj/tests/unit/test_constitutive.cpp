#include <cmath>

#include <doctest.h>

#include "sgshell/closed_form.hpp"
#include "sgshell/constitutive.hpp"
#include "sgshell/errors.hpp"
#include "sgshell/kinematics.hpp"

using namespace sgshell;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no sgshell::Error thrown");
  return ErrorKind::TaskError;
}

KinematicState rolled_state() {
  const ExampleCase c = ExampleCase::defaults(ExampleKind::RolledPlate);
  return kinematics_at(c.reference_chart(), c.deformed_chart(), {0.3, 0.4});
}

}  // namespace

TEST_SUITE("constitutive") {

TEST_CASE("rolled-plate energies match the frozen oracle") {
  MaterialParameters m;
  m.h = 0.1;
  m.gradient = Dilatational{0.05};
  const KinematicState kin = rolled_state();
  CHECK(koiter_density(kin, m) == doctest::Approx(5.5555555555555572e-5).epsilon(1e-10));
  CHECK(w4_dilatational(kin, m) == doctest::Approx(5.5555555555555572e-5).epsilon(1e-10));
  CHECK(w4_density(kin, m) == doctest::Approx(w4_dilatational(kin, m)));
}

TEST_CASE("membrane energy of an equibiaxial strain") {
  MaterialParameters m;
  m.lambda = 2.0;
  m.mu = 0.5;
  m.h = 0.2;
  const double e = 0.01;
  const Eigen::Matrix2d eps = e * Eigen::Matrix2d::Identity();
  const double k = m.lambda * m.mu / (m.lambda + 2.0 * m.mu);
  CHECK(koiter_density(eps, Eigen::Matrix2d::Zero(), Eigen::Matrix2d::Identity(), m) ==
        doctest::Approx(m.h * (k * 4.0 * e * e + m.mu * 2.0 * e * e)));
}

TEST_CASE("stored energies reject malformed input") {
  MaterialParameters m;
  m.gradient = ToupinMindlin{{0.1, 0.1, 0.1, 0.1, 0.1}};
  Eigen::Matrix3d E = Eigen::Matrix3d::Zero();
  E(0, 1) = 0.1;
  Tensor3 G{};
  CHECK(kind_of([&] { (void)stored_3d_toupin_mindlin(E, G, m); }) == ErrorKind::SymmetryViolation);

  MaterialParameters d;
  d.gradient = Dilatational{0.1};
  Eigen::Matrix3d F = Eigen::Matrix3d::Identity();
  F(2, 2) = -1.0;
  CHECK(kind_of([&] { (void)stored_3d_dilatational(F, Eigen::Vector3d::Zero(), d); }) == ErrorKind::OrientationLoss);

  MaterialParameters plain;
  CHECK(kind_of([&] { (void)plain.toupin_mindlin(); }) == ErrorKind::MissingModuli);
  CHECK(kind_of([&] { (void)plain.dilatational(); }) == ErrorKind::MissingModuli);
  CHECK(w4_density(rolled_state(), plain) == 0.0);
}

TEST_CASE("stored_quadratic is the St Venant-Kirchhoff energy") {
  Eigen::Matrix3d E;
  E << 0.1, 0.02, 0.0, 0.02, -0.05, 0.01, 0.0, 0.01, 0.03;
  const double lambda = 1.2, mu = 0.7;
  CHECK(stored_quadratic(E, lambda, mu) ==
        doctest::Approx(0.5 * lambda * E.trace() * E.trace() + mu * (E * E).trace()));
}

TEST_CASE("specialized kinetic density matches the general one") {
  MaterialParameters m;
  m.lambda = 1.3;
  m.mu = 0.9;
  m.h = 0.08;
  m.ell_k = 0.04;
  m.rho_R = 2.0;
  const Eigen::Vector3d n = Eigen::Vector3d(0.2, -0.3, 1.0).normalized();
  const Eigen::Vector3d vn = n.cross(Eigen::Vector3d(1.0, 0.5, -0.2));
  const Eigen::Vector3d vy(0.3, -0.1, 0.2);
  Eigen::Matrix3d grad_vy;
  grad_vy << 0.1, 0.2, 0.0, -0.3, 0.05, 0.1, 0.0, 0.2, -0.1;
  const double tr_rate = 0.07, H = 0.4, K = 0.1;
  const Eigen::Vector3d vd = vn - m.lame_ratio() * tr_rate * n;
  CHECK(kinetic_shell_density_specialized(vy, vn, n, tr_rate, grad_vy, H, K, m) ==
        doctest::Approx(kinetic_shell_density(vy, vd, grad_vy, H, K, m)).epsilon(1e-12));
  CHECK(kind_of([&] { (void)kinetic_shell_density_specialized(vy, vn + 0.1 * n, n, tr_rate, grad_vy, H, K, m); }) ==
        ErrorKind::NonOrthogonalRate);
}

TEST_CASE("kinetic positive-definiteness thresholds") {
  // Sphere of radius r: H = -1/r, K = 1/r^2, threshold h = 2r.
  const double r = 0.5;
  CHECK(kinetic_positive_definite(-1.0 / r, 1.0 / (r * r), 0.999 * 2.0 * r));
  CHECK_FALSE(kinetic_positive_definite(-1.0 / r, 1.0 / (r * r), 1.001 * 2.0 * r));
  // Cylinder of radius R: |H| = 1/(2R), K = 0, threshold h = 2 sqrt(3) R.
  const double R = 2.0;
  CHECK(kinetic_positive_definite(0.5 / R, 0.0, 0.999 * 2.0 * std::sqrt(3.0) * R));
  CHECK_FALSE(kinetic_positive_definite(0.5 / R, 0.0, 1.001 * 2.0 * std::sqrt(3.0) * R));
  CHECK(kinetic_positive_definite(0.0, 0.0, 100.0));
}

TEST_CASE("ellipticity report flags bad Toupin-Mindlin moduli") {
  MaterialParameters good;
  good.gradient = ToupinMindlin{{0.2, 0.1, 0.3, 1.0, 0.25}};
  CHECK(ellipticity_report(good).strongly_elliptic);
  MaterialParameters bad;
  bad.gradient = ToupinMindlin{{-1.0, -1.0, -1.0, -1.0, -1.0}};
  const EllipticityReport rep = ellipticity_report(bad);
  CHECK_FALSE(rep.strongly_elliptic);
  CHECK_FALSE(rep.warnings.empty());
}

}
