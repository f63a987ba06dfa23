#include "sgshell/kinematics.hpp"

#include <cmath>

#include "sgshell/errors.hpp"

namespace sgshell {

namespace {

double lame_ratio(double lambda, double mu) { return lambda / (lambda + 2.0 * mu); }

Jet det3(const Vec3J& c1, const Vec3J& c2, const Vec3J& c3) { return dot(c1, cross(c2, c3)); }

Mat3J outer(const Vec3J& a, const Vec3J& b) {
  Mat3J m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[i] * b[j];
  return m;
}

Mat3J green_strain(const Mat3J& F) {
  Mat3J E;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Jet s = F(0, i) * F(0, j) + F(1, i) * F(1, j) + F(2, i) * F(2, j);
      if (i == j) s -= 1.0;
      E(i, j) = 0.5 * s;
    }
  return E;
}

}  // namespace

Eigen::Vector3d KinematicState::grad_tr_eps_vector() const {
  return grad_tr_eps[0] * ref.dual_basis[0] + grad_tr_eps[1] * ref.dual_basis[1];
}

Eigen::Vector3d KinematicState::div_eps_vector() const {
  return div_eps[0] * ref.dual_basis[0] + div_eps[1] * ref.dual_basis[1];
}

KinematicState kinematics_from(const StrainJets& k) {
  KinematicState s;
  s.ref = geometry_from(k.ref);
  for (int a = 0; a < 2; ++a) {
    s.cur_basis[a] = values(k.cur.basis[a]);
    s.S[a] = values(k.S[a]);
    s.grad_tr_eps[a] = k.tr_eps.derivative(a).value();
  }
  s.a = values(k.cur.metric);
  s.b = values(k.cur.curvature);
  s.n = values(k.cur.normal);
  s.eps = values(k.eps);
  s.rho = values(k.rho);
  s.tr_eps = k.tr_eps.value();
  s.tr_rho = k.tr_rho.value();

  const auto ge = covariant_strain_gradient(k);
  for (int c = 0; c < 2; ++c) s.grad_eps[c] = values(ge[c]);
  for (int a = 0; a < 2; ++a) {
    double v = 0.0;
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) v += s.ref.dual_metric(b, c) * s.grad_eps[c](a, b);
    s.div_eps[a] = v;
  }
  return s;
}

KinematicState kinematics_at(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta) {
  return kinematics_from(strain_jets(reference, deformed, theta, 2));
}

DirectorState directors_at(const KinematicState& kin, double lambda, double mu) {
  const double c = lame_ratio(lambda, mu);
  DirectorState d;
  d.E33 = -c * kin.tr_eps;
  const double radicand = 1.0 + 2.0 * d.E33;
  if (!(radicand > 0.0)) throw Error(ErrorKind::ThicknessCollapse, "1 + 2 E33 <= 0");
  d.phi = std::sqrt(radicand);
  d.d = d.phi * kin.n;
  d.g = c * kin.tr_rho * kin.n;
  for (int a = 0; a < 2; ++a) {
    const double dphi = -c * kin.grad_tr_eps[a] / d.phi;
    for (int b = 0; b < 2; ++b) d.g -= dphi * kin.ref.dual_metric(a, b) * kin.cur_basis[b];
  }
  return d;
}

Tensor3 midsurface_strain_gradient(const KinematicState& kin, double lambda, double mu) {
  const double c = lame_ratio(lambda, mu);
  const auto& Ad = kin.ref.dual_basis;
  const Eigen::Vector3d& N = kin.ref.normal;
  const Eigen::Vector3d gt = kin.grad_tr_eps_vector();
  Tensor3 H{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double v = c * (kin.tr_rho * N[i] * N[j] * N[k] - N[i] * N[j] * gt[k]);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            v -= kin.rho(a, b) * Ad[a][i] * Ad[b][j] * N[k];
            for (int g = 0; g < 2; ++g) v += kin.grad_eps[g](a, b) * Ad[a][i] * Ad[b][j] * Ad[g][k];
          }
        H[i][j][k] = v;
      }
  return H;
}

Eigen::Vector3d trace12(const Tensor3& t) {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) v[k] += t[i][i][k];
  return v;
}

Eigen::Vector3d trace23(const Tensor3& t) {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[i] += t[i][j][j];
  return v;
}

ShellJets shell_jets(const Vec3J& reference, const Vec3J& deformed, double lambda, double mu) {
  ShellJets s;
  s.strain = strain_jets(reference, deformed);
  s.directors = director_jets(s.strain, lambda, mu);
  s.lambda = lambda;
  s.mu = mu;
  return s;
}

ShellJets shell_jets(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta, double lambda,
                     double mu, int order) {
  ShellJets s;
  s.strain = strain_jets(reference, deformed, theta, order);
  s.directors = director_jets(s.strain, lambda, mu);
  s.lambda = lambda;
  s.mu = mu;
  return s;
}

Recovered3D recovered_3d_motion(const ShellJets& shell, double zeta) {
  const SurfaceJets& x = shell.strain.ref;
  const SurfaceJets& y = shell.strain.cur;
  const Vec3J& d = shell.directors.d;
  const Vec3J& g = shell.directors.g;
  if (g.x().order() < 1) {
    throw Error(ErrorKind::InsufficientSmoothness, "the 3D deformation gradient needs third partials of y");
  }

  Recovered3D out;
  const double mu_s = 1.0 - 2.0 * x.mean.value() * zeta + x.gauss.value() * zeta * zeta;
  if (!(mu_s > 0.0)) throw Error(ErrorKind::ShellSpaceViolation, "1 - 2H zeta + K zeta^2 <= 0");
  out.volume_factor = mu_s;

  // Normal-coordinate Jacobian columns and the rows of its inverse.
  const std::array<Vec3J, 2> dN = {derivative(x.normal, 0), derivative(x.normal, 1)};
  const Vec3J c1 = x.basis[0] + dN[0] * Jet(zeta);
  const Vec3J c2 = x.basis[1] + dN[1] * Jet(zeta);
  const Vec3J& c3 = x.normal;
  const Jet inv_det = 1.0 / det3(c1, c2, c3);
  const std::array<Vec3J, 3> rows = {cross(c2, c3) * inv_det, cross(c3, c1) * inv_det, cross(c1, c2) * inv_det};

  const double half_z2 = 0.5 * zeta * zeta;
  const Vec3J chi = y.position + d * Jet(zeta) + g * Jet(half_z2);
  std::array<Vec3J, 2> dchi;
  for (int a = 0; a < 2; ++a)
    dchi[a] = y.basis[a] + derivative(d, a) * Jet(zeta) + derivative(g, a) * Jet(half_z2);
  const Vec3J dchi_z = d + g * Jet(zeta);

  const Mat3J F = outer(dchi[0], rows[0]) + outer(dchi[1], rows[1]) + outer(dchi_z, rows[2]);
  const Mat3J E = green_strain(F);
  out.point = values(chi);
  out.F = values(F);
  out.E = values(E);
  out.det_F = out.F.determinant();
  if (!(out.det_F > 0.0)) throw Error(ErrorKind::OrientationLoss, "det F <= 0 in the recovered motion");

  if (F(0, 0).order() < 1) return out;
  out.has_gradients = true;

  // ζ-derivative of F, from the closed form of the ζ-dependence.
  Eigen::Matrix3d Gi;
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k) Gi(r, k) = rows[r][k].value();
  Eigen::Matrix3d D = Eigen::Matrix3d::Zero();
  D.col(0) = values(dN[0]);
  D.col(1) = values(dN[1]);
  const Eigen::Matrix3d dGi = -Gi * D * Gi;
  const Eigen::Vector3d gv = values(g);
  Eigen::Matrix3d Fz = gv * Gi.row(2);
  for (int a = 0; a < 2; ++a) {
    const Eigen::Vector3d ddir = values(derivative(d, a)) + zeta * values(derivative(g, a));
    Fz += ddir * Gi.row(a) + values(dchi[a]) * dGi.row(a);
  }
  const Eigen::Matrix3d FtFz = out.F.transpose() * Fz;
  const Eigen::Matrix3d Ez = 0.5 * (FtFz + FtFz.transpose());
  const std::array<Eigen::Matrix3d, 2> Ea = {values(derivative(E, 0)), values(derivative(E, 1))};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.grad_E[i][j][k] = Ea[0](i, j) * Gi(0, k) + Ea[1](i, j) * Gi(1, k) + Ez(i, j) * Gi(2, k);

  const Jet J = det3(F.col(0), F.col(1), F.col(2));
  const double dJz = out.det_F * (out.F.inverse() * Fz).trace();
  out.grad_det_F = J.derivative(0).value() * Gi.row(0).transpose() + J.derivative(1).value() * Gi.row(1).transpose() +
                   dJz * Gi.row(2).transpose();
  return out;
}

Recovered3D recovered_3d_motion(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                                double zeta, double lambda, double mu) {
  const int order = std::min({reference.max_order(), deformed.max_order(), 4});
  return recovered_3d_motion(shell_jets(reference, deformed, theta, lambda, mu, order), zeta);
}

}  // namespace sgshell
