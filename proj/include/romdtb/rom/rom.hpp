#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "romdtb/linalg/blocked_matrix.hpp"
#include "romdtb/linalg/matrix.hpp"
#include "romdtb/rom/gramian.hpp"
#include "romdtb/rom/truncation.hpp"
#include "romdtb/wavesim/dataset.hpp"

namespace romdtb {

enum class RomKind { kFull, kRegularized };

/// Reduced order model: block tridiagonal propagator, initial block b
/// (nonzero only in its first block) and, once computed, the lower block
/// bidiagonal factor of (2/tau^2)(I - propagator).
struct Rom {
  RomKind kind = RomKind::kFull;
  double tau = 0.0;
  BlockedMatrix propagator;
  Matrix b;
  std::optional<BlockedMatrix> factor;

  // regularized only
  std::size_t blocks = 0;
  double theta = 0.0;
  double tail_mass = 0.0;
  Matrix basis_u;  // Lanczos change of basis

  std::size_t m() const noexcept { return b.cols(); }
  std::size_t dim() const noexcept { return b.rows(); }
};

/// Untruncated ROM from the Cholesky factor of M. A Cholesky breakdown is
/// reported as IndefiniteGramian.
Rom rom_full(const ArrayDataSet& d);
Rom rom_full(const GramPair& g, double tau);

/// ROM in a projected space. sfrak is the SPD square root of the projected
/// Gramian (diagonal for the measured data), scal the projected stiffness,
/// e1 the projected first-block selector.
Rom rom_projected(const Matrix& sfrak, const Matrix& sfrak_inv, const Matrix& scal, const Matrix& e1, double tau);

/// Spectrally truncated ROM re-tridiagonalized by block Lanczos.
Rom rom_regularized(const ArrayDataSet& d, const TruncationSpec& spec);
Rom rom_regularized(const Truncation& t, double tau);

/// (2/tau^2)(I - P) as a block tridiagonal matrix.
BlockedMatrix stiffness_form(const Rom& rom);

/// Factor L with L L^T = (2/tau^2)(I - P). BreakdownError when I - P is not
/// positive definite.
BlockedMatrix propagator_factor(const Rom& rom);
void attach_factor(Rom& rom);

/// b^T T_k(P) b for k < count.
std::vector<Matrix> rom_synthesize(const Rom& rom, std::size_t count);
ArrayDataSet rom_synthesize_data(const Rom& rom, std::size_t count, Physics physics = Physics::kAcoustic);

/// Eigenvalues of the propagator, descending.
std::vector<double> propagator_spectrum(const Rom& rom);

}  // namespace romdtb
