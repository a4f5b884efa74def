#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "romdtb/linalg/kernels.hpp"
#include "romdtb/wavesim/dataset.hpp"
#include "romdtb/wavesim/grid.hpp"
#include "romdtb/wavesim/medium.hpp"

namespace romdtb {

/// Unknown layout of the staggered grid.
///
/// Acoustic: primary P at the nodes; dual components on x-faces
/// (i - 1/2, j) for i = 0..nx, then on z-faces (i, j + 1/2). There is no
/// face above the surface row (sound hard), and P vanishes beyond the other
/// walls.
///
/// Elastic: primary v1 at (i + 1/2, j + 1/2), i < nx - 1, then v2 at the
/// nodes (i, j) including the surface row. Dual T11 and T22 at
/// (i, j + 1/2), then T12 at (i + 1/2, j) for j >= 1 (no shear stress on
/// the traction-free surface).
struct FieldLayout {
  Physics physics = Physics::kAcoustic;
  Grid grid;
  std::size_t primary_dim = 0;
  std::size_t dual_dim = 0;

  static FieldLayout make(Physics p, const Grid& g);

  // elastic primary offsets
  std::size_t v1_index(std::size_t i, std::size_t j) const noexcept { return j * (grid.nx - 1) + i; }
  std::size_t v2_index(std::size_t i, std::size_t j) const noexcept {
    return (grid.nx - 1) * grid.nz + j * grid.nx + i;
  }
};

/// Staggered first-order operator pair. lt maps primary to dual fields,
/// l is its exact transpose. lt = lt_base + lt_potential where only the
/// potential depends on q, linearly, with the same sparsity pattern.
struct DiscreteWaveOperator {
  FieldLayout layout;
  kernels::CsrMatrix lt_base;
  kernels::CsrMatrix lt_potential;
  kernels::CsrMatrix lt;
  kernels::CsrMatrix l;

  void apply_l(std::span<const double> dual, std::span<double> primary) const;
  void apply_lt(std::span<const double> primary, std::span<double> dual) const;
};

DiscreteWaveOperator assemble_operators(const Medium& medium);
DiscreteWaveOperator assemble_acoustic(const Grid& g, const std::vector<double>& c, const std::vector<double>& q);
DiscreteWaveOperator assemble_elastic(const Grid& g, const std::vector<double>& cp, const std::vector<double>& gamma,
                                      const std::vector<double>& q);

kernels::CsrMatrix csr_transpose(const kernels::CsrMatrix& a);
kernels::CsrMatrix csr_add(const kernels::CsrMatrix& a, const kernels::CsrMatrix& b);

/// Estimate of the largest eigenvalue of L L^T by power iteration.
double estimate_lambda_max(const DiscreteWaveOperator& op, int iterations = 60);

}  // namespace romdtb
