#include "sgshell/equilibrium.hpp"

#include <algorithm>

#include "sgshell/errors.hpp"
#include "sgshell/kinematics.hpp"
#include "sgshell/tensor_ops.hpp"

namespace sgshell {

ResultantJets resultant_jets(const StrainJets& k, const MaterialParameters& mat) {
  const double ell = mat.dilatational().ell_s;
  const double lam = mat.lambda, mu = mat.mu, h = mat.h;
  const double s = lam + 2.0 * mu;
  const double kappa = lam * mu / s;
  const double q = h * ell * ell * mu * mu * mu / (s * s);  // h ℓ² μ · μ²/(λ+2μ)²

  const Mat2J& Ad = k.ref.dual_metric;
  const Mat2J eps_up = raise(Ad, k.eps);
  const Mat2J rho_up = raise(Ad, k.rho);
  const std::array<Jet, 2> dtr = {k.tr_eps.derivative(0), k.tr_eps.derivative(1)};
  const std::array<Mat2J, 2> dAd = {derivative(Ad, 0), derivative(Ad, 1)};
  const auto& Gam = k.cur.christoffel;
  const auto& Gbar = k.ref.christoffel;

  // Gradient of tr ε raised once: A^γδ (tr ε),δ.
  std::array<Jet, 2> dtr_up;
  for (int g = 0; g < 2; ++g) dtr_up[g] = Ad(g, 0) * dtr[0] + Ad(g, 1) * dtr[1];

  ResultantJets r;
  for (int si = 0; si < 2; ++si) {
    for (int ta = 0; ta < 2; ++ta) {
      Jet grad_part = Jet(0.0);
      for (int g = 0; g < 2; ++g) {
        Jet bracket = dAd[g](si, ta);
        for (int a = 0; a < 2; ++a) bracket += Gam[si](a, g) * Ad(a, ta) + Gam[ta](a, g) * Ad(a, si);
        grad_part += dtr_up[g] * bracket;
      }
      r.sigma(si, ta) = h * (2.0 * kappa * Ad(si, ta) * k.tr_eps + 2.0 * mu * eps_up(si, ta)) + 4.0 * q * grad_part;
      r.M(si, ta) = h * h * h / 12.0 * (kappa * Ad(si, ta) * k.tr_rho + mu * rho_up(si, ta)) +
                    4.0 * q * Ad(si, ta) * k.tr_rho;
      for (int l = 0; l < 2; ++l) {
        r.MM[l](si, ta) = 2.0 * q * (dtr_up[ta] * Ad(si, l) + dtr_up[si] * Ad(ta, l));
      }
    }
  }

  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < 2; ++a) {
      Jet v = r.sigma(b, a);
      for (int g = 0; g < 2; ++g)
        for (int m = 0; m < 2; ++m) v -= r.MM[b](g, m) * k.S[a](g, m);
      r.N(b, a) = v;
    }
  }
  for (int a = 0; a < 2; ++a) {
    Jet v = Jet(0.0);
    for (int m = 0; m < 2; ++m)
      for (int g = 0; g < 2; ++g) v += r.MM[a](m, g) * k.cur.curvature(m, g) - r.M(m, g) * k.S[a](m, g);
    r.Nn[a] = v;
  }

  const auto& ab = k.cur.basis;
  const Vec3J& n = k.cur.normal;
  for (int a = 0; a < 2; ++a) {
    r.Nvec[a] = ab[0] * r.N(0, a) + ab[1] * r.N(1, a) + n * r.Nn[a];
    for (int b = 0; b < 2; ++b) r.Mvec[a][b] = ab[0] * r.MM[0](a, b) + ab[1] * r.MM[1](a, b) + n * r.M(a, b);
  }

  if (r.Mvec[0][0].x().order() < 1) return r;
  r.has_T = true;
  for (int a = 0; a < 2; ++a) {
    // Covariant divergence 𝐌^{αβ}_{|β} with the reference connection.
    Vec3J div = derivative(r.Mvec[a][0], 0) + derivative(r.Mvec[a][1], 1);
    for (int b = 0; b < 2; ++b)
      for (int l = 0; l < 2; ++l) div += r.Mvec[a][l] * Gbar[b](l, b) + r.Mvec[l][b] * Gbar[a](l, b);
    r.T[a] = r.Nvec[a] - div;
  }

  if (r.T[0].x().order() < 1) return r;
  r.has_g = true;
  const Jet& rootA = k.ref.area;
  Vec3J div = derivative(Vec3J(r.T[0] * rootA), 0) + derivative(Vec3J(r.T[1] * rootA), 1);
  r.g = -div / rootA;
  return r;
}

StressResultants values(const ResultantJets& r) {
  StressResultants s;
  s.sigma = values(r.sigma);
  s.M = values(r.M);
  s.N = values(r.N);
  for (int a = 0; a < 2; ++a) {
    s.MM[a] = values(r.MM[a]);
    s.Nn[a] = r.Nn[a].value();
    s.Nvec[a] = values(r.Nvec[a]);
    for (int b = 0; b < 2; ++b) s.Mvec[a][b] = values(r.Mvec[a][b]);
    s.T[a] = r.has_T ? values(r.T[a]) : Eigen::Vector3d::Zero();
  }
  s.g = r.has_g ? values(r.g) : Eigen::Vector3d::Zero();
  s.has_T = r.has_T;
  s.has_g = r.has_g;
  return s;
}

StressResultants stress_resultants_at(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                                      const MaterialParameters& mat) {
  const int order = std::min({reference.max_order(), deformed.max_order(), 4});
  return values(resultant_jets(strain_jets(reference, deformed, theta, order), mat));
}

std::array<Eigen::Vector3d, 2> t_vectors_at(const Chart& reference, const Chart& deformed,
                                            const Eigen::Vector2d& theta, const MaterialParameters& mat) {
  const int order = std::min(reference.max_order(), deformed.max_order());
  if (order < 3) throw Error(ErrorKind::InsufficientSmoothness, "T^alpha needs third partials of the charts");
  const ResultantJets r = resultant_jets(strain_jets(reference, deformed, theta, 3), mat);
  return {values(r.T[0]), values(r.T[1])};
}

Eigen::Vector3d body_force_at(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                              const MaterialParameters& mat) {
  const int order = std::min(reference.max_order(), deformed.max_order());
  if (order < 4) throw Error(ErrorKind::InsufficientSmoothness, "the body force needs fourth partials of the charts");
  return values(resultant_jets(strain_jets(reference, deformed, theta, 4), mat).g);
}

double shell_energy_density(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta,
                            const MaterialParameters& mat) {
  const KinematicState kin = kinematics_at(reference, deformed, theta);
  return koiter_density(kin, mat) + w4_dilatational(kin, mat);
}

}  // namespace sgshell
