#pragma once

#include <cstddef>
#include <vector>

#include "romdtb/linalg/matrix.hpp"
#include "romdtb/wavesim/dataset.hpp"
#include "romdtb/wavesim/operators.hpp"

namespace romdtb {

/// Sensor positions along the surface (x coordinates, same length unit as
/// the grid) and the Gaussian width w.
struct SensorGeometry {
  std::vector<double> positions;
  double width = 0.0;

  /// m_a sensors with the given spacing, centered on x_center.
  /// width <= 0 selects spacing / 2.
  static SensorGeometry uniform(std::size_t m_a, double spacing, double x_center, double width = 0.0);
  std::size_t count() const noexcept { return positions.size(); }
};

/// Normalized sensor functions b^(s) as columns of b (primary_dim x m).
/// The quadrature weight sqrt(hx hz) is folded in, so sum_i b_is^2 = 1 and
/// Euclidean products equal quadrature. Elastic bases have two channels
/// per sensor: columns [0, m_a) polarized along x, [m_a, 2 m_a) along z.
struct SensorBasis {
  SensorGeometry geometry;
  std::size_t channels = 1;
  Matrix b;

  std::size_t m() const noexcept { return b.cols(); }
};

/// Bumps exp(-r^2 / (2 w^2)) truncated at 4w, centered at (x_s + x_offset, 0).
SensorBasis build_sensor_basis(const SensorGeometry& geometry, const FieldLayout& layout, double x_offset = 0.0);

}  // namespace romdtb
