#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "romdtb/linalg/matrix.hpp"
#include "romdtb/wavesim/dataset.hpp"
#include "romdtb/wavesim/medium.hpp"
#include "romdtb/wavesim/operators.hpp"
#include "romdtb/wavesim/sensors.hpp"

namespace romdtb {

struct SimulationOptions {
  double tau = 0.0;
  std::size_t n = 0;
  int substeps = 0;            // 0: ceil(tau / (cfl_ratio * h / max speed))
  double cfl_ratio = 0.4;
  bool pad = true;             // extend the grid so the walls stay silent
  double pad_margin_cells = 4.0;
  bool symmetrize = true;
  bool keep_snapshots = false; // fill the fine snapshot matrix (tests)
  int jobs = 0;                // threads over sources, 0 = OpenMP default
};

/// Primary fields P_k (primary_dim x m) at the sampling instants, on the
/// simulation grid.
struct FineSnapshotMatrix {
  std::vector<Matrix> snapshots;
};

struct SimulationResult {
  ArrayDataSet data;
  std::optional<FineSnapshotMatrix> fine;
  SensorBasis sensors;        // on the simulation grid
  Grid grid;                  // simulation grid after padding
  std::size_t pad_left = 0;
  std::size_t pad_right = 0;
  std::size_t pad_bottom = 0;
  int substeps = 0;
  double raw_asymmetry = 0.0; // max |D_k - D_k^T| before symmetrizing
};

struct Padding {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t bottom = 0;
};

/// Nodes to add so every wall is at least max_speed * n * tau + 4w plus
/// a margin away from the sensors.
Padding required_padding(const Grid& g, const SensorGeometry& sensors, double max_speed, double tau, std::size_t n,
                         double margin_cells);

/// Leapfrog on the staggered system, recording every `substeps` steps:
///   P^_0 = (dt/2) L^T P_0,  P_{j+1} = P_j - dt L P^_j,  P^_{j+1} = P^_j + dt L^T P_{j+1},
/// with P_0 = b^(s) and D_k^(r,s) = b^(r)^T P_{k*substeps}.
SimulationResult simulate(const Medium& medium, const SensorGeometry& sensors, const SimulationOptions& options);

/// Data only, same as simulate(...).data.
ArrayDataSet simulate_data(const Medium& medium, const SensorGeometry& sensors, const SimulationOptions& options);

int default_substeps(const Grid& g, double max_speed, double tau, double cfl_ratio);

}  // namespace romdtb
