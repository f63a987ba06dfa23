#include "sgshell/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "sgshell/equilibrium.hpp"
#include "sgshell/errors.hpp"
#include "sgshell/geometry.hpp"
#include "sgshell/quadrature.hpp"
#include "sgshell/tensor_ops.hpp"

namespace sgshell {

namespace {

struct FrameJets {
  Vec3J tau, nu;
  std::array<Jet, 2> tau_cov, nu_cov, nu_up;
  Jet speed;
};

FrameJets frame_jets(const SurfaceJets& x, const Eigen::Vector2d& e) {
  FrameJets f;
  const Vec3J tangent = x.basis[0] * Jet(e[0]) + x.basis[1] * Jet(e[1]);
  f.speed = sqrt(dot(tangent, tangent));
  f.tau = tangent / f.speed;
  f.nu = cross(f.tau, x.normal);
  for (int a = 0; a < 2; ++a) {
    f.tau_cov[a] = dot(f.tau, x.basis[a]);
    f.nu_cov[a] = dot(f.nu, x.basis[a]);
    f.nu_up[a] = dot(f.nu, x.dual_basis[a]);
  }
  return f;
}

Eigen::Vector2d clamp_to(const ParameterDomain& d, Eigen::Vector2d theta) {
  theta[0] = std::clamp(theta[0], d.u0, d.u1);
  theta[1] = std::clamp(theta[1], d.v0, d.v1);
  return theta;
}

}  // namespace

Boundary Boundary::rectangle(const ParameterDomain& d) {
  Boundary b;
  const Eigen::Vector2d c00(d.u0, d.v0), c10(d.u1, d.v0), c11(d.u1, d.v1), c01(d.u0, d.v1);
  b.edges = {{"v0", c00, c10, 1}, {"u1", c10, c11, 2}, {"v1", c11, c01, 3}, {"u0", c01, c00, 0}};
  b.corners = {{"u1v0", 0, 1}, {"u1v1", 1, 2}, {"u0v1", 2, 3}, {"u0v0", 3, 0}};
  return b;
}

Boundary Boundary::periodic(const ParameterDomain& d) {
  Boundary b;
  b.edges = {{"v0", {d.u0, d.v0}, {d.u1, d.v0}, 0}, {"v1", {d.u1, d.v1}, {d.u0, d.v1}, 1}};
  return b;
}

Boundary Boundary::of(const ParameterDomain& d) { return d.periodic_u ? periodic(d) : rectangle(d); }

BoundaryFrame boundary_frame(const Chart& reference, const BoundaryEdge& edge, double t) {
  const Eigen::Vector2d theta = clamp_to(reference.domain(), edge.at(t));
  const FrameJets f = frame_jets(surface_jets(reference.expand(theta, 2)), edge.direction());
  BoundaryFrame out;
  out.tau = values(f.tau);
  out.nu = values(f.nu);
  for (int a = 0; a < 2; ++a) {
    out.tau_cov[a] = f.tau_cov[a].value();
    out.nu_cov[a] = f.nu_cov[a].value();
  }
  out.ds_dt = f.speed.value();
  return out;
}

EdgeLoads edge_loads_at(const Chart& reference, const Chart& deformed, const BoundaryEdge& edge, double t,
                        const MaterialParameters& mat) {
  if (std::min(reference.max_order(), deformed.max_order()) < 3) {
    throw Error(ErrorKind::InsufficientSmoothness, "edge tractions need third partials of the charts");
  }
  const Eigen::Vector2d theta = clamp_to(reference.domain(), edge.at(t));
  const StrainJets k = strain_jets(reference, deformed, theta, 3);
  const ResultantJets r = resultant_jets(k, mat);
  const Eigen::Vector2d e = edge.direction();
  const FrameJets f = frame_jets(k.ref, e);

  Vec3J q = lift(Eigen::Vector3d::Zero());
  Vec3J m = lift(Eigen::Vector3d::Zero());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      q += r.Mvec[a][b] * (f.nu_cov[a] * f.tau_cov[b]);
      m += r.Mvec[a][b] * (f.nu_cov[a] * f.nu_cov[b]);
    }
  // Arclength derivative along the straight parameter segment.
  const Eigen::Vector3d dq = (e[0] * values(derivative(q, 0)) + e[1] * values(derivative(q, 1))) / f.speed.value();

  EdgeLoads out;
  out.frame.tau = values(f.tau);
  out.frame.nu = values(f.nu);
  for (int a = 0; a < 2; ++a) {
    out.frame.tau_cov[a] = f.tau_cov[a].value();
    out.frame.nu_cov[a] = f.nu_cov[a].value();
  }
  out.frame.ds_dt = f.speed.value();
  out.t = f.nu_cov[0].value() * values(r.T[0]) + f.nu_cov[1].value() * values(r.T[1]) - dq;
  out.m = values(m);
  const Eigen::Vector3d y_nu = f.nu_up[0].value() * values(k.cur.basis[0]) + f.nu_up[1].value() * values(k.cur.basis[1]);
  out.c = y_nu.cross(out.m);
  out.M_nu_tau = values(q);
  return out;
}

void validate_corners(const Chart& reference, const Boundary& boundary) {
  for (size_t i = 0; i < boundary.edges.size(); ++i) {
    const int next = boundary.edges[i].next;
    if (next < 0) continue;
    const bool declared = std::any_of(boundary.corners.begin(), boundary.corners.end(), [&](const Corner& c) {
      return c.edge_in == static_cast<int>(i) && c.edge_out == next;
    });
    if (declared) continue;
    const Eigen::Vector3d before = boundary_frame(reference, boundary.edges[i], 1.0).tau;
    const Eigen::Vector3d after = boundary_frame(reference, boundary.edges[static_cast<size_t>(next)], 0.0).tau;
    if ((before - after).norm() > 1e-6) {
      throw Error(ErrorKind::CornerUndeclared, "tangent jumps between edges '" + boundary.edges[i].name + "' and '" +
                                                   boundary.edges[static_cast<size_t>(next)].name + "'");
    }
  }
}

std::vector<CornerForce> corner_forces(const Chart& reference, const Chart& deformed, const Boundary& boundary,
                                       const MaterialParameters& mat) {
  validate_corners(reference, boundary);
  std::vector<CornerForce> out;
  for (const Corner& c : boundary.corners) {
    const BoundaryEdge& in = boundary.edges.at(static_cast<size_t>(c.edge_in));
    const BoundaryEdge& outgoing = boundary.edges.at(static_cast<size_t>(c.edge_out));
    const Eigen::Vector3d before = edge_loads_at(reference, deformed, in, 1.0, mat).M_nu_tau;
    const Eigen::Vector3d after = edge_loads_at(reference, deformed, outgoing, 0.0, mat).M_nu_tau;
    out.push_back({c.name, outgoing.start, -(after - before)});
  }
  return out;
}

Eigen::Vector3d total_force_balance(const Chart& reference, const Chart& deformed, const Boundary& boundary,
                                    const MaterialParameters& mat, int order, int panels) {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& node : parameter_nodes(reference.domain(), order, panels)) {
    const StressResultants r = values(resultant_jets(strain_jets(reference, deformed, node.theta, 4), mat));
    const GeometryState g = geometry_at(reference, node.theta);
    sum += node.weight * g.area_weight * r.g;
  }
  for (const BoundaryEdge& edge : boundary.edges) {
    for (int p = 0; p < panels; ++p) {
      const QuadratureRule rule = gauss_legendre(order, double(p) / panels, double(p + 1) / panels);
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const EdgeLoads l = edge_loads_at(reference, deformed, edge, rule.nodes[i], mat);
        sum += rule.weights[i] * l.frame.ds_dt * l.t;
      }
    }
  }
  for (const CornerForce& c : corner_forces(reference, deformed, boundary, mat)) sum += c.f;
  return sum;
}

double WeakFormBalance::relative_gap() const {
  const double scale = std::max({std::abs(internal), std::abs(external), 1e-300});
  return std::abs(internal - external) / scale;
}

WeakFormBalance weak_form_balance(const Chart& reference, const Chart& deformed, const Boundary& boundary,
                                  const MaterialParameters& mat, const Chart::JetMap& u, int order, int panels) {
  auto u_at = [&](const Eigen::Vector2d& theta) {
    return u(Jet::variable(0, theta[0], 2), Jet::variable(1, theta[1], 2));
  };

  WeakFormBalance out;
  for (const auto& node : parameter_nodes(reference.domain(), order, panels)) {
    const StrainJets k = strain_jets(reference, deformed, node.theta, 4);
    const StressResultants r = values(resultant_jets(k, mat));
    const GeometryState g = geometry_from(k.ref);
    const Vec3J uj = u_at(node.theta);
    const std::array<Vec3J, 2> du = {derivative(uj, 0), derivative(uj, 1)};
    double internal = 0.0;
    for (int a = 0; a < 2; ++a) {
      internal += r.Nvec[a].dot(values(du[a]));
      for (int b = 0; b < 2; ++b) {
        Eigen::Vector3d u_ab = values(derivative(du[a], b));
        for (int c = 0; c < 2; ++c) u_ab -= g.christoffel[c](a, b) * values(du[c]);
        internal += r.Mvec[a][b].dot(u_ab);
      }
    }
    const double w = node.weight * g.area_weight;
    out.internal += w * internal;
    out.external += w * r.g.dot(values(uj));
  }

  for (const BoundaryEdge& edge : boundary.edges) {
    for (int p = 0; p < panels; ++p) {
      const QuadratureRule rule = gauss_legendre(order, double(p) / panels, double(p + 1) / panels);
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const Eigen::Vector2d theta = clamp_to(reference.domain(), edge.at(rule.nodes[i]));
        const EdgeLoads l = edge_loads_at(reference, deformed, edge, rule.nodes[i], mat);
        const GeometryState g = geometry_at(reference, theta);
        const Vec3J uj = u_at(theta);
        Eigen::Vector3d u_nu = Eigen::Vector3d::Zero();
        for (int a = 0; a < 2; ++a) u_nu += l.frame.nu.dot(g.dual_basis[a]) * values(derivative(uj, a));
        out.external += rule.weights[i] * l.frame.ds_dt * (l.t.dot(values(uj)) + l.m.dot(u_nu));
      }
    }
  }
  for (const CornerForce& c : corner_forces(reference, deformed, boundary, mat)) {
    out.external += c.f.dot(values(u_at(c.theta)));
  }
  return out;
}

}  // namespace sgshell
