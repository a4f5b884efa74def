#pragma once

#include <string>
#include <vector>

#include "romdtb/wavesim/medium.hpp"
#include "romdtb/wavesim/sensors.hpp"
#include "romdtb/wavesim/simulate.hpp"

namespace romdtb {

/// Desk-scale two-inclusion configurations. Lengths in km, times in s.
struct PresetParams {
  std::size_t m_a = 16;
  double spacing = 0.08;     // sensor spacing
  double width = 0.0;        // Gaussian width, 0: spacing / 2
  double tau = 0.034;
  std::size_t n = 40;
  double h = 0.02;           // grid spacing
  double contrast = 1.0;     // scales the reflectivity of the inclusions
  double speed = 1.5;        // acoustic c, or elastic cs (cp = 2 cs)
  int substeps = 0;
};

struct Preset {
  std::string name;
  Medium medium;
  SensorGeometry sensors;
  SimulationOptions options;
};

PresetParams default_params(const std::string& name);

/// "acoustic-two-inclusions", "elastic-two-inclusions" or "homogeneous-acoustic".
Preset make_preset(const std::string& name);
Preset make_preset(const std::string& name, const PresetParams& params);

std::vector<std::string> preset_names();

}  // namespace romdtb
