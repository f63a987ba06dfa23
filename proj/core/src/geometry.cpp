#include "sgshell/geometry.hpp"

#include "sgshell/errors.hpp"
#include "sgshell/quadrature.hpp"
#include "sgshell/surface_fields.hpp"

namespace sgshell {

GeometryState geometry_at(const Chart& chart, const Eigen::Vector2d& theta) {
  return geometry_from(surface_jets(chart.expand(theta, 2)));
}

GeometryState geometry_from(const SurfaceJets& s) {
  GeometryState g;
  for (int a = 0; a < 2; ++a) {
    g.basis[a] = values(s.basis[a]);
    g.dual_basis[a] = values(s.dual_basis[a]);
    g.christoffel[a] = values(s.christoffel[a]);
  }
  g.metric = values(s.metric);
  g.dual_metric = values(s.dual_metric);
  g.normal = values(s.normal);
  g.curvature = values(s.curvature);
  g.mean = s.mean.value();
  g.gauss = s.gauss.value();
  g.area_weight = s.area.value();
  return g;
}

double volume_factor(const GeometryState& geom, double zeta) {
  const double mu = 1.0 - 2.0 * geom.mean * zeta + geom.gauss * zeta * zeta;
  if (!(mu > 0.0)) {
    throw Error(ErrorKind::ShellSpaceViolation, "1 - 2H zeta + K zeta^2 <= 0 at zeta = " + std::to_string(zeta));
  }
  return mu;
}

std::vector<ParameterNode> parameter_nodes(const ParameterDomain& d, int order, int panels) {
  std::vector<ParameterNode> out;
  out.reserve(static_cast<size_t>(order * order * panels * panels));
  const double du = (d.u1 - d.u0) / panels, dv = (d.v1 - d.v0) / panels;
  for (int pu = 0; pu < panels; ++pu) {
    const QuadratureRule ru = gauss_legendre(order, d.u0 + pu * du, d.u0 + (pu + 1) * du);
    for (int pv = 0; pv < panels; ++pv) {
      const QuadratureRule rv = gauss_legendre(order, d.v0 + pv * dv, d.v0 + (pv + 1) * dv);
      for (size_t i = 0; i < ru.nodes.size(); ++i)
        for (size_t j = 0; j < rv.nodes.size(); ++j)
          out.push_back({Eigen::Vector2d(ru.nodes[i], rv.nodes[j]), ru.weights[i] * rv.weights[j]});
    }
  }
  return out;
}

double surface_integral(const Chart& chart, const SurfaceField& field, int order, int panels) {
  double sum = 0.0;
  for (const auto& node : parameter_nodes(chart.domain(), order, panels)) {
    const GeometryState g = geometry_at(chart, node.theta);
    sum += node.weight * g.area_weight * field(node.theta, g);
  }
  return sum;
}

double surface_integral(const Chart& chart, const SurfaceField& field, int order) {
  return surface_integral(chart, field, order, 1);
}

}  // namespace sgshell
