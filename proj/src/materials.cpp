#include "pmlwave/materials.hpp"

#include <cmath>
#include <stdexcept>

namespace pmlwave {

namespace {

void check_index(int v, const char* name) {
  if (v < 0 || v > 2) throw std::out_of_range(std::string("tensor index ") + name + " out of range 0..2");
}

double voigt_component(const Mat6& voigt, int i, int j, int k, int l) {
  check_index(i, "i");
  check_index(j, "j");
  check_index(k, "k");
  check_index(l, "l");
  return voigt(voigt_index(i, j), voigt_index(k, l));
}

}  // namespace

int voigt_index(int i, int j) {
  if (i == j) return i;
  return 6 - i - j;  // (1,2)->3, (0,2)->4, (0,1)->5
}

double StiffnessTensor::component(int i, int j, int k, int l) const {
  return voigt_component(voigt, i, j, k, l);
}

double ViscosityTensor::component(int i, int j, int k, int l) const {
  return voigt_component(voigt, i, j, k, l);
}

StiffnessTensor isotropic_stiffness(double lambda, double mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu))
    throw std::invalid_argument("isotropic_stiffness: non-finite Lame coefficient");
  StiffnessTensor t;
  Mat6& c = t.voigt;
  c(0, 0) = c(1, 1) = c(2, 2) = lambda + 2.0 * mu;
  c(0, 1) = c(0, 2) = c(1, 2) = lambda;
  c(1, 0) = c(2, 0) = c(2, 1) = lambda;
  c(3, 3) = c(4, 4) = c(5, 5) = mu;
  return t;
}

StiffnessTensor full_to_voigt(const std::function<double(int, int, int, int)>& c) {
  static constexpr int pair_i[6] = {0, 1, 2, 1, 0, 0};
  static constexpr int pair_j[6] = {0, 1, 2, 2, 2, 1};
  StiffnessTensor t;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) t.voigt(p, q) = c(pair_i[p], pair_j[p], pair_i[q], pair_j[q]);
  return t;
}

bool is_positive_definite(const Mat6& m, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Mat6> es(m, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  return hi > 0.0 && lo > rel_tol * hi;
}

bool is_positive_semidefinite(const Mat6& m, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Mat6> es(m, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  return lo >= -rel_tol * scale;
}

FullTensor FullTensor::from_voigt(const Mat6& voigt) {
  FullTensor t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t.c[((i * 3 + j) * 3 + k) * 3 + l] = voigt(voigt_index(i, j), voigt_index(k, l));
  return t;
}

void validate_material(const Material& m) {
  if (!(m.density > 0.0) || !std::isfinite(m.density))
    throw std::invalid_argument("material: density must be positive and finite");
  if (!m.stiffness.voigt.allFinite())
    throw std::invalid_argument("material: stiffness has non-finite entries");
  if (!m.stiffness.voigt.isApprox(m.stiffness.voigt.transpose(), 1e-12))
    throw std::invalid_argument("material: stiffness Voigt matrix is not symmetric");
  if (!is_positive_definite(m.stiffness.voigt))
    throw std::invalid_argument("material: stiffness Voigt matrix is not positive definite");
  if (m.viscosity) {
    if (!m.viscosity->voigt.allFinite())
      throw std::invalid_argument("material: viscosity has non-finite entries");
    if (!m.viscosity->voigt.isApprox(m.viscosity->voigt.transpose(), 1e-12))
      throw std::invalid_argument("material: viscosity Voigt matrix is not symmetric");
    if (!is_positive_semidefinite(m.viscosity->voigt))
      throw std::invalid_argument("material: viscosity Voigt matrix is not positive semidefinite");
  }
}

PlaneWaveProbe::PlaneWaveProbe(const Vec3& n) {
  const double norm = n.norm();
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw std::invalid_argument("plane-wave probe direction must be a nonzero finite vector");
  direction = n / norm;
}

Mat3 christoffel_matrix(const StiffnessTensor& c, const Vec3& n) {
  Mat3 gamma = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) s += c.component(i, j, k, l) * n[j] * n[l];
      gamma(i, k) = s;
    }
  return gamma;
}

Vec3 christoffel_speeds(const Material& m, const PlaneWaveProbe& probe) {
  const Mat3 gamma = christoffel_matrix(m.stiffness, probe.direction);
  Eigen::SelfAdjointEigenSolver<Mat3> es(gamma, Eigen::EigenvaluesOnly);
  const Vec3 ev = es.eigenvalues();  // ascending
  if (ev[0] <= 0.0)
    throw std::domain_error("material invalid along direction: Christoffel matrix not positive definite");
  return (ev / m.density).cwiseSqrt();
}

std::vector<Vec3> fibonacci_directions(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci_directions: need at least one sample");
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<std::size_t>(n));
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return dirs;
}

SpeedBounds speed_bounds(const Material& m, int samples) {
  if (samples < 26) throw std::invalid_argument("speed_bounds: need at least 26 direction samples");
  SpeedBounds b{std::numeric_limits<double>::infinity(), 0.0};
  for (const Vec3& n : fibonacci_directions(samples)) {
    const Vec3 speeds = christoffel_speeds(m, PlaneWaveProbe(n));
    b.c_min = std::min(b.c_min, speeds[0]);
    b.c_max = std::max(b.c_max, speeds[2]);
  }
  return b;
}

}  // namespace pmlwave
