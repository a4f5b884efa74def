#include "romdtb/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <set>

#include "romdtb/errors.hpp"
#include "romdtb/wavesim/io.hpp"

namespace romdtb::cli {

namespace pt = boost::property_tree;

namespace {

const std::set<std::string> kKnownKeys{
    "physics.physics", "physics.preset",   "physics.medium", "physics.contrast", "physics.speed",
    "array.m_a",       "array.spacing",    "array.width",    "timing.tau",       "timing.n",
    "timing.substeps", "noise.percent",    "noise.seed",     "truncation.mode",  "truncation.value",
    "output.directory"};

// Whole-string numeric conversion; ptree's own get() falls back silently.
template <typename T>
T get(const pt::ptree& tree, const std::string& key, T fallback) {
  auto raw = tree.get_optional<std::string>(key);
  if (!raw) return fallback;
  if constexpr (std::is_same_v<T, std::string>) {
    return *raw;
  } else {
    std::string text = *raw;
    text.erase(0, text.find_first_not_of(" \t"));
    text.erase(text.find_last_not_of(" \t") + 1);
    T v{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size())
      throw ValidationError("config key '" + key + "' has a malformed value '" + *raw + "'");
    return v;
  }
}

TruncationSpec parse_truncation(const std::string& mode, const std::optional<std::string>& value) {
  if (mode == "auto") return TruncationSpec::automatic();
  if (!value) throw ValidationError("truncation mode '" + mode + "' needs a value");
  try {
    if (mode == "threshold") {
      const double theta = std::stod(*value);
      if (!(theta >= 0.0)) throw ValidationError("truncation threshold must be nonnegative");
      return TruncationSpec::threshold(theta);
    }
    if (mode == "rank") {
      const long z = std::stol(*value);
      if (z <= 0) throw ValidationError("truncation rank must be positive");
      return TruncationSpec::rank(std::size_t(z));
    }
  } catch (const std::logic_error&) {
    throw ValidationError("truncation value '" + *value + "' is not a number");
  }
  throw ValidationError("unknown truncation mode '" + mode + "' (auto, threshold, rank)");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (preset && medium_path) throw ValidationError("config names both a preset and a medium file");
  if (!preset && !medium_path) throw ValidationError("config needs a preset or a medium file");
  if (params.m_a == 0) throw ValidationError("m_a must be positive");
  if (params.n == 0) throw ValidationError("n must be positive");
  if (!(params.tau > 0.0)) throw ValidationError("tau must be positive");
  if (!(params.spacing > 0.0)) throw ValidationError("sensor spacing must be positive");
  if (params.width < 0.0) throw ValidationError("sensor width must be nonnegative");
  if (params.substeps < 0) throw ValidationError("substeps must be nonnegative");
  if (!(noise_percent >= 0.0)) throw ValidationError("noise percent must be nonnegative");
  if (medium_path && !std::filesystem::exists(*medium_path))
    throw IoError("medium file not found: " + medium_path->string());
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;
  cfg.params = default_params(name);
  cfg.preset = name;
  cfg.physics = name == "elastic-two-inclusions" ? Physics::kElastic : Physics::kAcoustic;
  return cfg;
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError(std::string("config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  for (const auto& [section, body] : tree) {
    for (const auto& [key, value] : body) {
      (void)value;
      if (!kKnownKeys.count(section + "." + key)) throw ValidationError("unknown config key '" + section + "." + key + "'");
    }
  }

  ExperimentConfig cfg;
  if (auto p = tree.get_optional<std::string>("physics.preset")) cfg = preset_config(*p);
  if (auto ph = tree.get_optional<std::string>("physics.physics")) {
    const Physics declared = physics_from_string(*ph);
    if (cfg.preset && declared != cfg.physics)
      throw ValidationError("physics '" + *ph + "' does not match preset '" + *cfg.preset + "'");
    cfg.physics = declared;
  }
  if (auto m = tree.get_optional<std::string>("physics.medium")) {
    std::filesystem::path path(*m);
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    cfg.medium_path = path;
  }
  PresetParams& p = cfg.params;
  p.contrast = get(tree, "physics.contrast", p.contrast);
  p.speed = get(tree, "physics.speed", p.speed);
  p.m_a = get(tree, "array.m_a", p.m_a);
  p.spacing = get(tree, "array.spacing", p.spacing);
  p.width = get(tree, "array.width", p.width);
  p.tau = get(tree, "timing.tau", p.tau);
  p.n = get(tree, "timing.n", p.n);
  p.substeps = get(tree, "timing.substeps", p.substeps);
  cfg.noise_percent = get(tree, "noise.percent", cfg.noise_percent);
  cfg.seed = get<std::uint64_t>(tree, "noise.seed", cfg.seed);
  std::optional<std::string> value;
  if (auto v = tree.get_optional<std::string>("truncation.value"); v && !v->empty()) value = *v;
  cfg.truncation = parse_truncation(get<std::string>(tree, "truncation.mode", "auto"), value);
  cfg.out_dir = get<std::string>(tree, "output.directory", cfg.out_dir.string());
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  try {
    return parse_config(in, path.parent_path());
  } catch (Error& e) {
    if (dynamic_cast<ValidationError*>(&e)) throw ValidationError(path.string() + ": " + e.message());
    throw;
  }
}

Preset build_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.preset) {
    Preset p = make_preset(*cfg.preset, cfg.params);
    if (physics_of(p.medium) != cfg.physics) throw ValidationError("preset physics does not match the config");
    return p;
  }
  Preset out;
  out.name = cfg.medium_path->filename().string();
  out.medium = read_medium(*cfg.medium_path);
  if (physics_of(out.medium) != cfg.physics)
    throw ValidationError("medium file physics is " + to_string(physics_of(out.medium)) + ", config says " +
                          to_string(cfg.physics));
  validate(out.medium);
  const double xc = 0.5 * grid_of(out.medium).width();
  out.sensors = SensorGeometry::uniform(cfg.params.m_a, cfg.params.spacing, xc, cfg.params.width);
  out.options.tau = cfg.params.tau;
  out.options.n = cfg.params.n;
  out.options.substeps = cfg.params.substeps;
  return out;
}

}  // namespace romdtb::cli
