#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "romdtb/cli/config.hpp"
#include "romdtb/cli/misfit.hpp"

namespace romdtb::cli {

/// Flags shared by the subcommands; unset values leave the config alone.
struct Overrides {
  std::optional<std::filesystem::path> config;
  std::optional<std::string> preset;
  std::optional<double> noise_percent;
  std::optional<std::uint64_t> seed;
  std::optional<double> theta;
  std::optional<std::size_t> rank;
  std::optional<int> jobs;
  std::optional<std::filesystem::path> out;
};

/// Config file or preset, then flag overrides.
ExperimentConfig resolve_config(const Overrides& o);

/// Writes <out>/data.adf, plus born.adf and background.adf with the
/// oracle, and <out>/manifest.json. Returns the manifest.
nlohmann::json cmd_simulate(const ExperimentConfig& cfg, bool with_oracle);

/// Runs the transform on a measured file against reference data simulated
/// in the configured background. Writes <out>/born.adf, reference.adf and
/// manifest.json.
nlohmann::json cmd_dtb(const std::filesystem::path& measured, const ExperimentConfig& cfg, bool unregularized);

/// Writes <out>/misfit.json and misfit.csv.
MisfitReport cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b,
                         const std::filesystem::path& out_dir);

/// Gramian eigenvalues as CSV, to the file or stdout when out is empty.
std::vector<double> cmd_spectrum(const std::filesystem::path& data, const std::filesystem::path& out);

/// "vertical=8", "horizontal=2" (elastic) or "<channel>=<factor>".
std::vector<double> channel_scales(const std::vector<std::string>& specs, std::size_t m, Physics physics);

void cmd_export_gather(const std::filesystem::path& data, std::size_t source, const std::vector<std::string>& amplify,
                       const std::filesystem::path& out);

}  // namespace romdtb::cli
