#include "sgshell/constitutive.hpp"

#include <cmath>
#include <sstream>

#include "sgshell/errors.hpp"

namespace sgshell {

namespace {

double norm2(const Eigen::Matrix2d& m, const Eigen::Matrix2d& Ad) { return (Ad * m * Ad * m.transpose()).trace(); }

double norm2(const Eigen::Vector2d& v, const Eigen::Matrix2d& Ad) { return v.dot(Ad * v); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

const ToupinMindlin& MaterialParameters::toupin_mindlin() const {
  if (const auto* tm = std::get_if<ToupinMindlin>(&gradient)) return *tm;
  throw Error(ErrorKind::MissingModuli, "Toupin-Mindlin moduli a1..a5 are not set");
}

const Dilatational& MaterialParameters::dilatational() const {
  if (const auto* d = std::get_if<Dilatational>(&gradient)) return *d;
  throw Error(ErrorKind::MissingModuli, "dilatational length ell_s is not set");
}

double koiter_density(const Eigen::Matrix2d& eps, const Eigen::Matrix2d& rho, const Eigen::Matrix2d& Ad,
                      const MaterialParameters& m) {
  const double k = m.lambda * m.mu / (m.lambda + 2.0 * m.mu);
  const double te = contract(Ad, eps), tr = contract(Ad, rho);
  const double h = m.h;
  return h * (k * te * te + m.mu * norm2(eps, Ad)) + h * h * h / 24.0 * (k * tr * tr + m.mu * norm2(rho, Ad));
}

double koiter_density(const KinematicState& kin, const MaterialParameters& mat) {
  return koiter_density(kin.eps, kin.rho, kin.ref.dual_metric, mat);
}

double w4_toupin_mindlin(const KinematicState& kin, const MaterialParameters& m) {
  const auto& a = m.toupin_mindlin().a;
  const Eigen::Matrix2d& Ad = kin.ref.dual_metric;
  const double s = m.lambda + 2.0 * m.mu;
  const double c = m.lambda / s;
  const double tr = kin.tr_rho;
  const double gte2 = norm2(kin.grad_tr_eps, Ad);
  const double div2 = norm2(kin.div_eps, Ad);
  const double gte_div = kin.grad_tr_eps.dot(Ad * kin.div_eps);

  double ge2 = 0.0, ge_t23 = 0.0;
  const auto& G = kin.grad_eps;  // [γ](α, β)
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int g1 = 0; g1 < 2; ++g1)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b2 = 0; b2 < 2; ++b2)
            for (int g2 = 0; g2 < 2; ++g2) {
              const double v = G[g1](a1, b1) * G[g2](a2, b2) * Ad(a1, a2);
              ge2 += v * Ad(b1, b2) * Ad(g1, g2);
              ge_t23 += v * Ad(b1, g2) * Ad(g1, b2);
            }

  const double t1 = (2.0 * m.mu / s) * gte_div - 2.0 * m.lambda * m.mu / (s * s) * tr * tr;
  const double t2 = 4.0 * m.mu * m.mu / (s * s) * (gte2 + tr * tr);
  const double t3 = div2 + c * c * tr * tr;
  const double t4 = ge2 + c * c * gte2 + norm2(kin.rho, Ad) + c * c * tr * tr;
  const double t5 = ge_t23 + c * c * tr * tr;
  return m.h * (a[0] * t1 + a[1] * t2 + a[2] * t3 + a[3] * t4 + a[4] * t5);
}

double w4_dilatational(const KinematicState& kin, const MaterialParameters& m) {
  const double ell = m.dilatational().ell_s;
  const double s = m.lambda + 2.0 * m.mu;
  return m.h * ell * ell * m.mu * (2.0 * m.mu * m.mu / (s * s)) *
         (norm2(kin.grad_tr_eps, kin.ref.dual_metric) + kin.tr_rho * kin.tr_rho);
}

double w4_density(const KinematicState& kin, const MaterialParameters& mat) {
  if (std::holds_alternative<ToupinMindlin>(mat.gradient)) return w4_toupin_mindlin(kin, mat);
  if (std::holds_alternative<Dilatational>(mat.gradient)) return w4_dilatational(kin, mat);
  return 0.0;
}

double stored_quadratic(const Eigen::Matrix3d& E, double lambda, double mu) {
  const double t = E.trace();
  return 0.5 * lambda * t * t + mu * E.squaredNorm();
}

double toupin_mindlin_gradient_energy(const Tensor3& G, const std::array<double, 5>& a) {
  Eigen::Vector3d grad_tr = Eigen::Vector3d::Zero(), div = Eigen::Vector3d::Zero();
  double g2 = 0.0, gt = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        g2 += G[i][j][k] * G[i][j][k];
        gt += G[i][j][k] * G[i][k][j];
      }
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      grad_tr[k] += G[i][i][k];
      div[i] += G[i][k][k];
    }
  return a[0] * grad_tr.dot(div) + a[1] * grad_tr.squaredNorm() + a[2] * div.squaredNorm() + a[3] * g2 + a[4] * gt;
}

double stored_3d_toupin_mindlin(const Eigen::Matrix3d& E, const Tensor3& G, const MaterialParameters& mat) {
  const auto& tm = mat.toupin_mindlin();
  const double scale_e = std::max(1.0, E.cwiseAbs().maxCoeff());
  if ((E - E.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale_e) {
    throw Error(ErrorKind::SymmetryViolation, "E is not symmetric");
  }
  double scale_g = 1.0;
  for (const auto& p : G)
    for (const auto& q : p)
      for (double v : q) scale_g = std::max(scale_g, std::abs(v));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (std::abs(G[i][j][k] - G[j][i][k]) > 1e-12 * scale_g) {
          throw Error(ErrorKind::SymmetryViolation, "Grad E is not symmetric in its first two indices");
        }
  return stored_quadratic(E, mat.lambda, mat.mu) + toupin_mindlin_gradient_energy(G, tm.a);
}

double stored_3d_dilatational(const Eigen::Matrix3d& F, const Eigen::Vector3d& grad_det_F,
                              const MaterialParameters& mat) {
  const double ell = mat.dilatational().ell_s;
  if (!(F.determinant() > 0.0)) throw Error(ErrorKind::OrientationLoss, "det F <= 0");
  const Eigen::Matrix3d E = 0.5 * (F.transpose() * F - Eigen::Matrix3d::Identity());
  return stored_quadratic(E, mat.lambda, mat.mu) + 0.5 * ell * ell * mat.mu * grad_det_F.squaredNorm();
}

double kinetic_shell_density(const Eigen::Vector3d& vy, const Eigen::Vector3d& vd, const Eigen::Matrix3d& grad_vy,
                             double H, double K, const MaterialParameters& m) {
  const double h2 = m.h * m.h, lk2 = m.ell_k * m.ell_k;
  const double rho_s = m.h * m.rho_R;
  return 0.5 * rho_s *
         ((1.0 + h2 * K / 12.0) * vy.squaredNorm() + h2 / 12.0 * vd.squaredNorm() - h2 / 3.0 * H * vy.dot(vd) +
          lk2 * grad_vy.squaredNorm() + lk2 * vd.squaredNorm());
}

double kinetic_shell_density_specialized(const Eigen::Vector3d& vy, const Eigen::Vector3d& vn,
                                         const Eigen::Vector3d& n, double tr_rate, const Eigen::Matrix3d& grad_vy,
                                         double H, double K, const MaterialParameters& m) {
  if (std::abs(n.dot(vn)) > 1e-8) throw Error(ErrorKind::NonOrthogonalRate, "n . d/dt n = " + fmt(n.dot(vn)));
  const double c = m.lame_ratio();
  const double h2 = m.h * m.h, lk2 = m.ell_k * m.ell_k;
  const double rho_s = m.h * m.rho_R;
  const double ct2 = c * c * tr_rate * tr_rate;
  return 0.5 * rho_s *
         ((1.0 + h2 * K / 12.0) * vy.squaredNorm() + h2 / 12.0 * ct2 + h2 / 12.0 * vn.squaredNorm() +
          h2 / 3.0 * H * vy.dot(c * tr_rate * n - vn) + lk2 * grad_vy.squaredNorm() + lk2 * ct2 +
          lk2 * vn.squaredNorm());
}

bool kinetic_positive_definite(double H, double K, double h) { return h * h * (4.0 * H * H - K) < 12.0; }

EllipticityReport ellipticity_report(const MaterialParameters& m) {
  EllipticityReport r;
  if (const auto* tm = std::get_if<ToupinMindlin>(&m.gradient)) {
    const auto& a = tm->a;
    r.toupin_mindlin = true;
    r.sum_a = a[0] + a[1] + a[2] + a[3] + a[4];
    r.a3_2a4_a5 = a[2] + 2.0 * a[3] + a[4];
    r.ell1_sq = r.sum_a / (m.lambda + 2.0 * m.mu);
    r.ell2_sq = r.a3_2a4_a5 / (2.0 * m.mu);
    if (!(r.sum_a > 0.0)) {
      r.strongly_elliptic = false;
      r.warnings.push_back("sum of a_j = " + fmt(r.sum_a) + " is not positive");
    }
    if (!(r.a3_2a4_a5 > 0.0)) {
      r.strongly_elliptic = false;
      r.warnings.push_back("a3 + 2 a4 + a5 = " + fmt(r.a3_2a4_a5) + " is not positive");
    }
  } else if (const auto* d = std::get_if<Dilatational>(&m.gradient)) {
    r.ell_s = d->ell_s;
  }
  if (!(m.mu > 0.0) || !(m.lambda + 2.0 * m.mu > 0.0)) {
    r.strongly_elliptic = false;
    r.warnings.push_back("Lame pair violates mu > 0, lambda + 2 mu > 0");
  }
  return r;
}

std::vector<std::string> regime_warnings(const MaterialParameters& m) {
  const EllipticityReport r = ellipticity_report(m);
  std::vector<std::string> out = r.warnings;
  const double bound = m.C1 * m.h;
  auto check = [&](const std::string& name, double ell) {
    if (ell > bound) out.push_back(name + " = " + fmt(ell) + " exceeds C1 h = " + fmt(bound));
  };
  if (r.toupin_mindlin) {
    if (r.ell1_sq > 0.0) check("ell_1", std::sqrt(r.ell1_sq));
    if (r.ell2_sq > 0.0) check("ell_2", std::sqrt(r.ell2_sq));
  } else {
    check("ell_s", r.ell_s);
  }
  check("ell_k", m.ell_k);
  return out;
}

}  // namespace sgshell
