#pragma once

#include <array>

#include "pmlwave/grid.hpp"
#include "pmlwave/types.hpp"

namespace pmlwave {

/// Per-axis damping-profile design: beta_j(x) = 0 inside the physical domain,
/// beta0_j * ((|x|-x0)/d)^n across the layer. alpha is the coordinate scaling
/// of the stretch function, pinned to 1 in this code.
struct PmlProfile {
  Vec3 beta0 = Vec3::Zero();  // 1/s
  int order = 2;
  double thickness = 0.0;   // d (m)
  double half_width = 0.0;  // x0 (m)
  Vec3 alpha = Vec3::Ones();

  void validate() const;  // throws std::invalid_argument
};

/// Polynomial damping profile along one axis (axis in 0..2).
/// Throws std::out_of_range for |x| beyond the outer PML edge.
double beta_profile(int axis, double x, const PmlProfile& p);

/// Maximum damping that yields amplitude reflection R at normal incidence:
/// beta0 = c_max * (n+1) * ln(1/R) / (2d).
double beta0_from_reflection(double reflection, int order, double thickness, double c_max);

/// Pointwise damping coefficients consumed by the solver, precomputed per node:
///   a = b1+b2+b3, b = b1 b2 + b2 b3 + b3 b1, c = b1 b2 b3,
///   ctilde_factor(j,l) = a - b_j - b_l   (multiplies C_ijkl / eta_ijkl),
///   cbreve_factor(l)   = prod_{m != l} b_m.
/// cbreve is the continuous extension of c / b_l: the quotient is 0/0 wherever
/// b_l = 0, while the product form is finite everywhere and equal to it
/// elsewhere. When no axis has damping the struct is inactive and stores
/// nothing; accessors then return zero.
struct PmlCoefficientFields {
  bool active = false;
  std::array<ArrayXd, 3> beta;
  ArrayXd a, b, c;
  std::array<ArrayXd, 9> ctilde;  // ctilde[3*j+l]
  std::array<ArrayXd, 3> cbreve;

  double beta_at(std::size_t node, int axis) const { return active ? beta[axis][node] : 0.0; }
  double a_at(std::size_t node) const { return active ? a[node] : 0.0; }
  double b_at(std::size_t node) const { return active ? b[node] : 0.0; }
  double c_at(std::size_t node) const { return active ? c[node] : 0.0; }
  double ctilde_factor(std::size_t node, int j, int l) const {
    return active ? ctilde[3 * j + l][node] : 0.0;
  }
  double cbreve_factor(std::size_t node, int l) const { return active ? cbreve[l][node] : 0.0; }
};

/// Evaluate the profile on every grid node. Throws on grid/profile geometry
/// mismatch (half widths or collar thickness disagree).
PmlCoefficientFields build_coefficient_fields(const GridSpec& grid, const PmlProfile& p);

}  // namespace pmlwave
