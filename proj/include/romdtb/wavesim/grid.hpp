#pragma once

#include <cstddef>

namespace romdtb {

/// Regular 2D node grid. Node (ix, iz) sits at (ix*hx, iz*hz); iz = 0 is
/// the accessible surface and iz grows with depth. Storage is row-major
/// with rows along depth: index = iz*nx + ix.
struct Grid {
  std::size_t nx = 0;
  std::size_t nz = 0;
  double hx = 1.0;
  double hz = 1.0;

  std::size_t size() const noexcept { return nx * nz; }
  std::size_t index(std::size_t ix, std::size_t iz) const noexcept { return iz * nx + ix; }
  double width() const noexcept { return double(nx - 1) * hx; }
  double depth() const noexcept { return double(nz - 1) * hz; }
  double cell_area() const noexcept { return hx * hz; }

  void validate() const;
};

}  // namespace romdtb
