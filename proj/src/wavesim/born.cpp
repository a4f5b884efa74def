#include "romdtb/wavesim/born.hpp"

#include "romdtb/errors.hpp"

namespace romdtb {

BornOracle born_oracle(const Medium& medium, const SensorGeometry& sensors, const SimulationOptions& options,
                       double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw ValidationError("born oracle step must lie in (0, 0.5]");
  ArrayDataSet d0 = simulate_data(reference_of(medium), sensors, options);
  ArrayDataSet dp = simulate_data(with_scaled_reflectivity(medium, eps), sensors, options);
  ArrayDataSet dm = simulate_data(with_scaled_reflectivity(medium, -eps), sensors, options);
  std::vector<Matrix> born;
  born.reserve(d0.count());
  for (std::size_t k = 0; k < d0.count(); ++k) {
    Matrix diff = dp[k] - dm[k];
    diff *= 1.0 / (2.0 * eps);
    born.push_back(d0[k] + diff);
  }
  ArrayDataSet out(d0.tau(), d0.physics(), std::move(born));
  out.geometry_hash = d0.geometry_hash;
  return BornOracle{std::move(out), std::move(d0)};
}

}  // namespace romdtb
