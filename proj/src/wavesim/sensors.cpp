#include "romdtb/wavesim/sensors.hpp"

#include <cmath>
#include <string>

#include "romdtb/errors.hpp"

namespace romdtb {

SensorGeometry SensorGeometry::uniform(std::size_t m_a, double spacing, double x_center, double width) {
  SensorGeometry g;
  g.width = width > 0.0 ? width : 0.5 * spacing;
  for (std::size_t s = 0; s < m_a; ++s) g.positions.push_back(x_center + (double(s) - 0.5 * double(m_a - 1)) * spacing);
  return g;
}

namespace {

// Fill column col of b with a normalized bump sampled at points pos(k).
template <typename PointFn>
void fill_bump(Matrix& b, std::size_t col, std::size_t count, PointFn pos, double xs, double w) {
  const double cutoff = 4.0 * w;
  double norm = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto [x, z, idx] = pos(k);
    const double r = std::hypot(x - xs, z);
    if (r > cutoff) continue;
    const double v = std::exp(-r * r / (2.0 * w * w));
    b(idx, col) = v;
    norm += v * v;
  }
  if (!(norm > 0.0)) throw GeometryError("sensor at x = " + std::to_string(xs) + " has no grid support");
  const double s = 1.0 / std::sqrt(norm);
  for (std::size_t k = 0; k < count; ++k) {
    const auto [x, z, idx] = pos(k);
    (void)x;
    (void)z;
    b(idx, col) *= s;
  }
}

struct Point {
  double x;
  double z;
  std::size_t idx;
};

}  // namespace

SensorBasis build_sensor_basis(const SensorGeometry& geometry, const FieldLayout& layout, double x_offset) {
  const Grid& g = layout.grid;
  if (geometry.positions.empty()) throw GeometryError("sensor array is empty");
  const double min_cell = std::min(g.hx, g.hz);
  if (geometry.width < min_cell * (1.0 - 1e-12))
    throw GeometryError("sensor width " + std::to_string(geometry.width) + " is below one grid cell");
  for (double x : geometry.positions) {
    const double xs = x + x_offset;
    if (xs < 0.0 || xs > g.width() || !std::isfinite(xs))
      throw GeometryError("sensor at x = " + std::to_string(x) + " lies outside the grid");
  }

  const std::size_t m_a = geometry.count();
  SensorBasis basis;
  basis.geometry = geometry;
  const double w = geometry.width;
  if (layout.physics == Physics::kAcoustic) {
    basis.channels = 1;
    basis.b = Matrix(layout.primary_dim, m_a);
    auto node = [&](std::size_t k) { return Point{double(k % g.nx) * g.hx, double(k / g.nx) * g.hz, k}; };
    for (std::size_t s = 0; s < m_a; ++s) fill_bump(basis.b, s, g.size(), node, geometry.positions[s] + x_offset, w);
  } else {
    basis.channels = 2;
    basis.b = Matrix(layout.primary_dim, 2 * m_a);
    const std::size_t n1 = (g.nx - 1) * g.nz;
    auto v1 = [&](std::size_t k) {
      const std::size_t i = k % (g.nx - 1), j = k / (g.nx - 1);
      return Point{(double(i) + 0.5) * g.hx, (double(j) + 0.5) * g.hz, layout.v1_index(i, j)};
    };
    auto v2 = [&](std::size_t k) {
      const std::size_t i = k % g.nx, j = k / g.nx;
      return Point{double(i) * g.hx, double(j) * g.hz, layout.v2_index(i, j)};
    };
    for (std::size_t s = 0; s < m_a; ++s) {
      const double xs = geometry.positions[s] + x_offset;
      fill_bump(basis.b, s, n1, v1, xs, w);
      fill_bump(basis.b, m_a + s, g.size(), v2, xs, w);
    }
  }
  return basis;
}

}  // namespace romdtb
