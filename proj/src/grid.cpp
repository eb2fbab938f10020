#include "pmlwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace pmlwave {

GridSpec GridSpec::make(double spacing, double physical_half_width, int pml_cells) {
  if (!(spacing > 0.0)) throw std::invalid_argument("grid: spacing must be positive");
  if (pml_cells < 1) throw std::invalid_argument("grid: pml_cells must be >= 1");
  const long half = std::lround(physical_half_width / spacing);
  if (half < 1) throw std::invalid_argument("grid: physical half-width smaller than one cell");
  GridSpec g;
  g.spacing = spacing;
  g.physical_half_width = static_cast<double>(half) * spacing;
  g.pml_cells = pml_cells;
  const int n = 2 * (static_cast<int>(half) + pml_cells) + 1;
  g.dims = {n, n, n};
  return g;
}

double mesh_size(double c_min, double nodes_per_wavelength, double f0) {
  if (!(c_min > 0.0 && nodes_per_wavelength > 0.0 && f0 > 0.0))
    throw std::invalid_argument("mesh_size: all arguments must be positive");
  return c_min / (nodes_per_wavelength * f0);
}

FieldState FieldState::zeros(const GridSpec& grid) {
  FieldState s;
  const auto n = static_cast<Eigen::Index>(grid.node_count());
  for (auto& f : s.u) f = ArrayXd::Zero(n);
  for (auto& f : s.v) f = ArrayXd::Zero(n);
  for (auto& f : s.U) f = ArrayXd::Zero(n);
  for (auto& f : s.w) f = ArrayXd::Zero(n);
  return s;
}

bool FieldState::all_finite() const {
  for (const auto& f : u)
    if (!f.allFinite()) return false;
  for (const auto& f : v)
    if (!f.allFinite()) return false;
  for (const auto& f : U)
    if (!f.allFinite()) return false;
  for (const auto& f : w)
    if (!f.allFinite()) return false;
  return true;
}

MaterialField MaterialField::uniform(const GridSpec& grid, Material m) {
  (void)grid;
  validate_material(m);
  MaterialField f;
  f.has_viscosity_ = m.viscosity.has_value();
  f.stiffness_full_.push_back(FullTensor::from_voigt(m.stiffness.voigt));
  f.viscosity_full_.push_back(m.viscosity ? FullTensor::from_voigt(m.viscosity->voigt) : FullTensor{});
  f.table_.push_back(std::move(m));
  return f;
}

}  // namespace pmlwave
