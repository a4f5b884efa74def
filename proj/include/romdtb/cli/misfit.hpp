#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "json.hpp"

#include "romdtb/wavesim/dataset.hpp"

namespace romdtb::cli {

/// Misfit of A against the reference B.
struct MisfitReport {
  std::vector<double> per_k;       // ||A_k - B_k||_F / ||B_k||_F (absolute when B_k = 0)
  double aggregate = 0.0;          // sqrt(sum ||A_k - B_k||^2 / sum ||B_k||^2)
  double max_entry_error = 0.0;    // max_k max_rs |A_k - B_k|
  std::optional<double> tail_mass; // discarded Gramian eigenvalues, when known
};

MisfitReport compute_misfit(const ArrayDataSet& a, const ArrayDataSet& b);

nlohmann::json to_json(const MisfitReport& r);
/// "k,relative_misfit" rows.
void write_misfit_csv(std::ostream& out, const MisfitReport& r);

}  // namespace romdtb::cli
