#pragma once

#include <array>

#include "sgshell/charts.hpp"
#include "sgshell/jet.hpp"

namespace sgshell {

/// Differential geometry of one surface carried as jets about a point.
///
/// If the position jet has order p, first-derivative quantities (basis,
/// metric, normal, area) have order p-1 and second-derivative quantities
/// (curvature, Christoffel symbols, H, K) have order p-2.
struct SurfaceJets {
  Vec3J position;
  std::array<Vec3J, 2> basis;
  std::array<Vec3J, 2> dual_basis;
  Mat2J metric;
  Mat2J dual_metric;
  Vec3J normal;
  Jet area;
  Mat2J curvature;                   // N·x,αβ
  std::array<Mat2J, 2> christoffel;  // [μ](α, β) = A^μ·x,αβ
  Jet mean;
  Jet gauss;
};

/// Requires position order >= 2. Throws DegenerateChart if |A₁ × A₂| < 1e-12.
SurfaceJets surface_jets(const Vec3J& position);

/// Strain measures of a deformation y of a reference surface x, as jets.
struct StrainJets {
  SurfaceJets ref;
  SurfaceJets cur;
  Mat2J eps;                   // ½(a - A), order p-1
  Mat2J rho;                   // b - B, order p-2
  std::array<Mat2J, 2> S;      // Γ - Γ̄, order p-2
  Jet tr_eps;                  // A^{αβ} ε_αβ
  Jet tr_rho;
};

StrainJets strain_jets(const Vec3J& reference, const Vec3J& deformed);

/// Expand both charts at θ to the given order; DomainMismatch if their
/// parameter rectangles differ.
StrainJets strain_jets(const Chart& reference, const Chart& deformed, const Eigen::Vector2d& theta, int order);

/// Jet-valued thickness stretch φ = (1 - 2 λ/(λ+2μ) tr ε)^{1/2}.
/// Throws ThicknessCollapse if the radicand is not positive.
Jet thickness_stretch(const Jet& tr_eps, double lambda, double mu);

/// Leading-order directors (d̄, ḡ) as jets. The rotation carrying the
/// reference frame to the current one is realized by pushing reference
/// tangent vectors forward with ∇_s y, so that R(v^γ A_γ + v_N N) is
/// assembled as v^γ y,_γ + v_N n.
struct DirectorJets {
  Jet phi;
  Vec3J d;  // order p-1
  Vec3J g;  // order p-2
};
DirectorJets director_jets(const StrainJets& k, double lambda, double mu);

/// ε_{αβ|γ} with the reference connection; [γ](α, β), order p-2.
std::array<Mat2J, 2> covariant_strain_gradient(const StrainJets& k);

}  // namespace sgshell
