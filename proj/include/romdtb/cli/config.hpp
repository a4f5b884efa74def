#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>

#include "romdtb/rom/truncation.hpp"
#include "romdtb/wavesim/dataset.hpp"
#include "romdtb/wavesim/presets.hpp"

namespace romdtb::cli {

/// One experiment, read from an INI file and/or command-line flags.
///
///   [physics]     physics = acoustic | elastic
///                 preset = <name>     or   medium = <path>
///                 contrast, speed     (presets only)
///   [array]       m_a, spacing, width
///   [timing]      tau, n, substeps
///   [noise]       percent, seed
///   [truncation]  mode = auto | threshold | rank, value
///   [output]      directory
struct ExperimentConfig {
  Physics physics = Physics::kAcoustic;
  std::optional<std::string> preset;
  std::optional<std::filesystem::path> medium_path;
  PresetParams params;
  double noise_percent = 0.0;
  std::uint64_t seed = 0;
  TruncationSpec truncation = TruncationSpec::automatic();
  std::filesystem::path out_dir = "out";
  int jobs = 0;

  void validate() const;
};

/// Parses INI text. Relative medium paths resolve against base_dir.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Config for a builtin preset with its default parameters.
ExperimentConfig preset_config(const std::string& name);

/// Medium, sensors and solver options described by the config.
Preset build_experiment(const ExperimentConfig& cfg);

}  // namespace romdtb::cli
