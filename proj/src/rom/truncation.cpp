#include "romdtb/rom/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "romdtb/errors.hpp"

namespace romdtb {

TruncationSpec TruncationSpec::rank(std::size_t z) {
  TruncationSpec s;
  s.mode = Mode::kRank;
  s.z = z;
  return s;
}

TruncationSpec TruncationSpec::threshold(double theta) {
  TruncationSpec s;
  s.mode = Mode::kThreshold;
  s.theta = theta;
  return s;
}

TruncationSpec TruncationSpec::automatic(std::optional<double> noise_std) {
  TruncationSpec s;
  s.mode = Mode::kThreshold;
  s.noise_std = noise_std;
  return s;
}

double default_threshold(const SpectralDecomposition& eig, std::size_t nm, std::optional<double> noise_std) {
  if (eig.eigenvalues.empty()) return 0.0;
  const double top = eig.eigenvalues.front();
  double edge = std::max(0.0, -eig.eigenvalues.back());
  if (noise_std) edge = std::max(edge, kNoiseEdgeFactor * *noise_std * std::sqrt(double(nm)));
  return std::max(1e-12 * std::abs(top), edge);
}

std::size_t rank_for_threshold(const std::vector<double>& eigenvalues, double theta, std::size_t m) {
  std::size_t count = 0;
  while (count < eigenvalues.size() && eigenvalues[count] > theta) ++count;
  return m == 0 ? 0 : count / m;
}

Truncation truncate_at(const GramPair& g, SpectralDecomposition eig, std::size_t blocks, double theta) {
  const std::size_t m = g.m;
  const std::size_t nm = g.mass.dim();
  if (blocks == 0) throw TruncationError("truncation keeps no eigenpairs (threshold above the spectrum)");
  if (blocks * m > nm)
    throw TruncationError("truncation rank " + std::to_string(blocks) + " exceeds n = " + std::to_string(g.n));
  const std::size_t zm = blocks * m;
  if (!(eig.eigenvalues[zm - 1] > 0.0))
    throw TruncationError("truncation rank " + std::to_string(blocks) + " reaches non-positive eigenvalues");

  Truncation t;
  t.z = eig.eigenvectors.columns(0, zm);
  t.sigma2.assign(eig.eigenvalues.begin(), eig.eigenvalues.begin() + long(zm));
  t.scal = symmetrized(matmul_tn(t.z, matmul(g.stiffness.entries(), t.z)));
  t.e1 = t.z.top_rows(m).transpose();
  t.blocks = blocks;
  t.theta = theta;
  for (std::size_t j = zm; j < eig.eigenvalues.size(); ++j) t.tail_mass += eig.eigenvalues[j];
  t.eig = std::move(eig);
  return t;
}

Truncation spectral_truncate(const GramPair& g, const TruncationSpec& spec) {
  SpectralDecomposition eig = sym_eig_desc(g.mass);
  if (spec.mode == TruncationSpec::Mode::kRank) return truncate_at(g, std::move(eig), spec.z, 0.0);
  const double theta = spec.theta ? *spec.theta : default_threshold(eig, g.mass.dim(), spec.noise_std);
  if (theta < 0.0) throw ValidationError("threshold must be nonnegative");
  const std::size_t blocks = rank_for_threshold(eig.eigenvalues, theta, g.m);
  return truncate_at(g, std::move(eig), blocks, theta);
}

}  // namespace romdtb
