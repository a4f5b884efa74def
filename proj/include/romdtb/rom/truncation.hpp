#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "romdtb/linalg/eigen.hpp"
#include "romdtb/linalg/matrix.hpp"
#include "romdtb/rom/gramian.hpp"

namespace romdtb {

/// How many Gramian eigenpairs to keep.
///
/// kRank keeps z*m pairs. kThreshold keeps the pairs with sigma^2 > theta,
/// rounded down to a multiple of m; without an explicit theta the default
/// threshold below is used.
struct TruncationSpec {
  enum class Mode { kRank, kThreshold };
  Mode mode = Mode::kThreshold;
  std::optional<double> theta;
  std::size_t z = 0;
  std::optional<double> noise_std;  // absolute data-noise level when known

  static TruncationSpec rank(std::size_t z);
  static TruncationSpec threshold(double theta);
  static TruncationSpec automatic(std::optional<double> noise_std = std::nullopt);

  bool is_automatic() const noexcept { return mode == Mode::kThreshold && !theta; }
};

/// Multiplier on std * sqrt(nm) in the default threshold.
inline constexpr double kNoiseEdgeFactor = 1.5;

/// Default threshold: max(1e-12 sigma_1^2, noise edge), where the noise
/// edge is the larger of |most negative eigenvalue| and
/// kNoiseEdgeFactor * std * sqrt(nm) when std is known.
double default_threshold(const SpectralDecomposition& eig, std::size_t nm, std::optional<double> noise_std);

/// Number of blocks kept for threshold theta.
std::size_t rank_for_threshold(const std::vector<double>& eigenvalues, double theta, std::size_t m);

struct Truncation {
  SpectralDecomposition eig;  // full spectrum of M
  Matrix z;                   // nm x zm, leading eigenvectors
  std::vector<double> sigma2; // leading zm eigenvalues
  Matrix scal;                // Z^T S Z
  Matrix e1;                  // Z^T E_1, zm x m
  std::size_t blocks = 0;     // z
  double theta = 0.0;         // threshold in effect (0 in rank mode)
  double tail_mass = 0.0;     // sum of discarded eigenvalues
};

Truncation spectral_truncate(const GramPair& g, const TruncationSpec& spec);

/// Truncation at an explicit rank reusing an existing decomposition.
Truncation truncate_at(const GramPair& g, SpectralDecomposition eig, std::size_t blocks, double theta);

}  // namespace romdtb
