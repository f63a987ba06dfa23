#include "sgshell/surface_fields.hpp"

#include "sgshell/errors.hpp"
#include "sgshell/tensor_ops.hpp"

namespace sgshell {

SurfaceJets surface_jets(const Vec3J& position) {
  if (min_order(position) < 2) {
    throw Error(ErrorKind::InsufficientSmoothness, "surface geometry needs second partials");
  }
  SurfaceJets s;
  s.position = position;
  for (int a = 0; a < 2; ++a) s.basis[a] = derivative(position, a);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s.metric(a, b) = dot(s.basis[a], s.basis[b]);

  const Vec3J n = cross(s.basis[0], s.basis[1]);
  s.area = sqrt(dot(n, n));
  if (!(s.area.value() >= 1e-12)) {
    throw Error(ErrorKind::DegenerateChart, "|A1 x A2| below 1e-12");
  }
  s.normal = n / s.area;

  const Jet det = s.metric(0, 0) * s.metric(1, 1) - s.metric(0, 1) * s.metric(1, 0);
  const Jet inv_det = 1.0 / det;
  s.dual_metric(0, 0) = s.metric(1, 1) * inv_det;
  s.dual_metric(1, 1) = s.metric(0, 0) * inv_det;
  s.dual_metric(0, 1) = -s.metric(0, 1) * inv_det;
  s.dual_metric(1, 0) = s.dual_metric(0, 1);
  for (int a = 0; a < 2; ++a) s.dual_basis[a] = s.basis[0] * s.dual_metric(a, 0) + s.basis[1] * s.dual_metric(a, 1);

  std::array<std::array<Vec3J, 2>, 2> second;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) second[a][b] = derivative(s.basis[a], b);

  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      s.curvature(a, b) = dot(s.normal, second[a][b]);
      for (int m = 0; m < 2; ++m) s.christoffel[m](a, b) = dot(s.dual_basis[m], second[a][b]);
    }
  }
  s.mean = 0.5 * contract(s.dual_metric, s.curvature);
  s.gauss = (s.curvature(0, 0) * s.curvature(1, 1) - s.curvature(0, 1) * s.curvature(1, 0)) * inv_det;
  return s;
}

StrainJets strain_jets(const Vec3J& reference, const Vec3J& deformed) {
  StrainJets k;
  k.ref = surface_jets(reference);
  k.cur = surface_jets(deformed);
  k.eps = 0.5 * (k.cur.metric - k.ref.metric);
  k.rho = k.cur.curvature - k.ref.curvature;
  for (int m = 0; m < 2; ++m) k.S[m] = k.cur.christoffel[m] - k.ref.christoffel[m];
  k.tr_eps = contract(k.ref.dual_metric, k.eps);
  k.tr_rho = contract(k.ref.dual_metric, k.rho);
  return k;
}

StrainJets strain_jets(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta, int order) {
  if (!(reference.domain() == deformed.domain())) {
    throw Error(ErrorKind::DomainMismatch,
                "charts '" + reference.name() + "' and '" + deformed.name() + "' use different parameter rectangles");
  }
  return strain_jets(reference.expand(theta, order), deformed.expand(theta, order));
}

Jet thickness_stretch(const Jet& tr_eps, double lambda, double mu) {
  const double c = lambda / (lambda + 2.0 * mu);
  const Jet radicand = 1.0 - 2.0 * c * tr_eps;
  if (!(radicand.value() > 0.0)) {
    throw Error(ErrorKind::ThicknessCollapse, "1 + 2 E33 <= 0");
  }
  return sqrt(radicand);
}

DirectorJets director_jets(const StrainJets& k, double lambda, double mu) {
  const double c = lambda / (lambda + 2.0 * mu);
  DirectorJets out;
  out.phi = thickness_stretch(k.tr_eps, lambda, mu);
  out.d = k.cur.normal * out.phi;
  out.g = k.cur.normal * (c * k.tr_rho);
  for (int a = 0; a < 2; ++a) {
    const Jet dphi = out.phi.derivative(a);
    for (int b = 0; b < 2; ++b) out.g -= k.cur.basis[b] * (dphi * k.ref.dual_metric(a, b));
  }
  return out;
}

std::array<Mat2J, 2> covariant_strain_gradient(const StrainJets& k) {
  std::array<Mat2J, 2> out;
  const auto& G = k.ref.christoffel;
  for (int c = 0; c < 2; ++c) {
    const Mat2J de = derivative(k.eps, c);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        Jet v = de(a, b);
        for (int l = 0; l < 2; ++l) v -= G[l](a, c) * k.eps(l, b) + G[l](b, c) * k.eps(a, l);
        out[c](a, b) = v;
      }
    }
  }
  return out;
}

}  // namespace sgshell
