#pragma once

#include "romdtb/wavesim/dataset.hpp"
#include "romdtb/wavesim/medium.hpp"
#include "romdtb/wavesim/sensors.hpp"
#include "romdtb/wavesim/simulate.hpp"

namespace romdtb {

struct BornOracle {
  ArrayDataSet born;        // D_0 + [D(+eps q) - D(-eps q)] / (2 eps)
  ArrayDataSet background;  // D_0, the q = 0 data
};

/// Central-difference directional derivative of the forward map at q = 0
/// along the medium's reflectivity. eps in (0, 0.5].
BornOracle born_oracle(const Medium& medium, const SensorGeometry& sensors, const SimulationOptions& options,
                       double eps = 1e-3);

}  // namespace romdtb
