#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "romdtb/dtb/perturbation.hpp"
#include "romdtb/rom/rom.hpp"
#include "romdtb/rom/truncation.hpp"
#include "romdtb/wavesim/dataset.hpp"

namespace romdtb {

struct DtbConfig {
  ArrayDataSet reference;  // data of the q = 0 medium, same geometry and tau
  TruncationSpec spec = TruncationSpec::automatic();
  /// With an automatic threshold, drop one block of rank and retry when the
  /// projected reference Gramian, Lanczos or the factorization breaks down.
  bool reduce_rank_on_breakdown = true;
};

struct StepTiming {
  int step = 0;
  std::string name;
  double seconds = 0.0;
};

struct DtbProvenance {
  bool regularized = true;
  double theta = 0.0;
  std::size_t blocks = 0;      // z
  std::size_t n = 0;
  double tail_mass = 0.0;      // sum of discarded Gramian eigenvalues
  std::vector<double> spectrum;
  std::size_t rank_reductions = 0;
  std::vector<StepTiming> timings;
};

struct DtbResult {
  ArrayDataSet born;
  ArrayDataSet reference_rom_data;  // regularized reference data
  Rom measured_rom;
  Rom reference_rom;
  DtbProvenance provenance;
};

/// Reference ROM in the truncation basis z of the measured data: the
/// projected Gramian Z^T M_0 Z is SPD but not diagonal, so its SPD square
/// root is used. Throws TruncationError if it is not positive definite.
Rom reference_rom(const Matrix& z, const ArrayDataSet& d0);
Rom reference_rom(const Matrix& z, const GramPair& g0, double tau);

/// Regularized data-to-Born transform. Errors carry the failing step:
/// 1 Gramians, 2 truncation, 3 reference Gramians, 4 projections,
/// 5 Lanczos and factors, 6 reference data, 7 perturbation and output.
DtbResult dtb_transform(const ArrayDataSet& measured, const DtbConfig& config);

/// Same construction with untruncated ROMs for both media.
DtbResult dtb_unregularized(const ArrayDataSet& measured, const ArrayDataSet& reference);

}  // namespace romdtb
