#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "pmlwave/types.hpp"

namespace pmlwave {

/// Voigt pair index for the (11,22,33,23,13,12) ordering, zero-based.
int voigt_index(int i, int j);

/// Rank-4 elasticity tensor stored as a symmetric 6x6 Voigt matrix (Pa).
/// Shear stiffnesses are stored raw, with no engineering-strain factor baked in.
struct StiffnessTensor {
  Mat6 voigt = Mat6::Zero();

  /// Full-tensor component C_ijkl, indices in 0..2.
  double component(int i, int j, int k, int l) const;
};

/// Rank-4 viscosity tensor (Pa*s), same storage convention as StiffnessTensor.
struct ViscosityTensor {
  Mat6 voigt = Mat6::Zero();

  double component(int i, int j, int k, int l) const;
};

/// Isotropic stiffness from the Lame coefficients.
StiffnessTensor isotropic_stiffness(double lambda, double mu);

/// Rebuild the Voigt matrix from a full-tensor sampler; the sampler must already
/// satisfy the minor symmetries (it is probed only at canonical index pairs).
StiffnessTensor full_to_voigt(const std::function<double(int, int, int, int)>& c);

/// Smallest eigenvalue > rel_tol * largest eigenvalue.
bool is_positive_definite(const Mat6& m, double rel_tol = 1e-9);

/// Eigenvalues >= -rel_tol * max|eigenvalue|; zero viscosity is valid.
bool is_positive_semidefinite(const Mat6& m, double rel_tol = 1e-9);

/// Flat 81-entry expansion of a Voigt tensor for indexed access in tight loops.
struct FullTensor {
  std::array<double, 81> c{};

  double operator()(int i, int j, int k, int l) const { return c[((i * 3 + j) * 3 + k) * 3 + l]; }

  static FullTensor from_voigt(const Mat6& voigt);
};

struct Material {
  double density = 0.0;  // kg/m^3
  StiffnessTensor stiffness;
  std::optional<ViscosityTensor> viscosity;
};

/// Throws std::invalid_argument naming the violated check.
void validate_material(const Material& m);

/// Unit propagation direction for plane-wave (Christoffel) analysis.
struct PlaneWaveProbe {
  Vec3 direction;

  explicit PlaneWaveProbe(const Vec3& n);
};

/// Gamma_ik = sum_jl C_ijkl n_j n_l.
Mat3 christoffel_matrix(const StiffnessTensor& c, const Vec3& n);

/// Phase speeds sqrt(eig(Gamma)/rho) along the probe direction, ascending (m/s).
/// Throws std::domain_error if Gamma is not positive definite along that direction.
Vec3 christoffel_speeds(const Material& m, const PlaneWaveProbe& probe);

/// Deterministic quasi-uniform unit directions (Fibonacci sphere).
std::vector<Vec3> fibonacci_directions(int n);

struct SpeedBounds {
  double c_min = 0.0;
  double c_max = 0.0;
};

/// Min/max Christoffel speed over a Fibonacci-sphere direction sample.
/// Requires samples >= 26.
SpeedBounds speed_bounds(const Material& m, int samples);

}  // namespace pmlwave
