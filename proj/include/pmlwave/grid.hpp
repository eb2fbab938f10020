#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pmlwave/materials.hpp"
#include "pmlwave/types.hpp"

namespace pmlwave {

/// Uniform cubic grid: physical cube of half-width x0 centered at the origin,
/// wrapped by a PML collar of pml_cells per side. Node counts are odd so the
/// origin is a node.
struct GridSpec {
  double spacing = 0.0;             // h (m)
  double physical_half_width = 0.0; // x0 snapped to a whole number of cells (m)
  int pml_cells = 0;
  std::array<int, 3> dims{0, 0, 0};

  /// Snaps x0 to round(x0/h)*h and derives dims = 2*(round(x0/h)+pml_cells)+1.
  static GridSpec make(double spacing, double physical_half_width, int pml_cells);

  int physical_half_cells() const { return static_cast<int>(std::lround(physical_half_width / spacing)); }
  std::size_t node_count() const {
    return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) * static_cast<std::size_t>(dims[2]);
  }
  std::size_t index(int i, int j, int k) const {  // x-fastest
    return (static_cast<std::size_t>(k) * dims[1] + j) * dims[0] + i;
  }
  int center(int axis) const { return (dims[axis] - 1) / 2; }
  double axis_coord(int axis, int idx) const { return (idx - center(axis)) * spacing; }
  Vec3 coord(int i, int j, int k) const {
    return {axis_coord(0, i), axis_coord(1, j), axis_coord(2, k)};
  }
  /// Nodes with |x_j| <= x0 on every axis (closure of the physical domain).
  bool is_physical(int i, int j, int k) const {
    const int hc = physical_half_cells();
    return std::abs(i - center(0)) <= hc && std::abs(j - center(1)) <= hc && std::abs(k - center(2)) <= hc;
  }
};

/// Mesh-size rule h = c_min / (N * f0).
double mesh_size(double c_min, double nodes_per_wavelength, double f0);

/// Per-node unknowns of the PML system: displacement u, velocity v,
/// displacement history U (running time integral of u), and the nine
/// auxiliary memory fields w_ij. w and U start at zero.
struct FieldState {
  std::array<ArrayXd, 3> u;  // m
  std::array<ArrayXd, 3> v;  // m/s
  std::array<ArrayXd, 3> U;  // m*s
  std::array<ArrayXd, 9> w;  // Pa, w[3*i+j]

  static FieldState zeros(const GridSpec& grid);

  bool all_finite() const;
};

/// Materials on the grid: a small table plus one table index per node.
/// The common homogeneous case stores a single entry and no index array.
class MaterialField {
 public:
  static MaterialField uniform(const GridSpec& grid, Material m);

  bool homogeneous() const { return index_.empty(); }
  const Material& at(std::size_t node) const { return table_[homogeneous() ? 0 : index_[node]]; }
  const FullTensor& stiffness_at(std::size_t node) const {
    return stiffness_full_[homogeneous() ? 0 : index_[node]];
  }
  const FullTensor& viscosity_at(std::size_t node) const {
    return viscosity_full_[homogeneous() ? 0 : index_[node]];
  }
  double density_at(std::size_t node) const { return table_[homogeneous() ? 0 : index_[node]].density; }
  bool has_viscosity() const { return has_viscosity_; }
  const std::vector<Material>& table() const { return table_; }

 private:
  std::vector<Material> table_;
  std::vector<FullTensor> stiffness_full_;
  std::vector<FullTensor> viscosity_full_;  // zero tensors when absent
  std::vector<std::uint8_t> index_;
  bool has_viscosity_ = false;
};

}  // namespace pmlwave
