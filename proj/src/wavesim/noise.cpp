#include "romdtb/wavesim/noise.hpp"

#include <random>

#include "romdtb/errors.hpp"

namespace romdtb {

ArrayDataSet add_noise(const ArrayDataSet& d, double percent, std::uint64_t seed) {
  if (!(percent >= 0.0)) throw ValidationError("noise percent must be nonnegative");
  ArrayDataSet out = d;
  if (percent == 0.0) return out;
  const double sd = percent / 100.0 * d.max_abs();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, sd);
  for (std::size_t k = 0; k < out.count(); ++k) {
    Matrix& dk = out[k];
    for (double& v : dk.values()) v += normal(rng);
  }
  out.symmetrize();
  out.noise = NoiseDescriptor{percent, seed, sd};
  return out;
}

}  // namespace romdtb
