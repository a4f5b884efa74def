#include "romdtb/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "romdtb/dtb/pipeline.hpp"
#include "romdtb/errors.hpp"
#include "romdtb/linalg/eigen.hpp"
#include "romdtb/rom/gramian.hpp"
#include "romdtb/wavesim/born.hpp"
#include "romdtb/wavesim/io.hpp"
#include "romdtb/wavesim/noise.hpp"

namespace romdtb::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

json truncation_json(const TruncationSpec& t) {
  if (t.mode == TruncationSpec::Mode::kRank) return {{"mode", "rank"}, {"z", t.z}};
  if (t.theta) return {{"mode", "threshold"}, {"theta", *t.theta}};
  return {{"mode", "auto"}};
}

json config_json(const ExperimentConfig& cfg) {
  json j;
  j["physics"] = to_string(cfg.physics);
  if (cfg.preset) j["preset"] = *cfg.preset;
  if (cfg.medium_path) j["medium"] = cfg.medium_path->string();
  j["array"] = {{"m_a", cfg.params.m_a}, {"spacing", cfg.params.spacing}, {"width", cfg.params.width}};
  j["timing"] = {{"tau", cfg.params.tau}, {"n", cfg.params.n}, {"substeps", cfg.params.substeps}};
  j["noise"] = {{"percent", cfg.noise_percent}, {"seed", cfg.seed}};
  j["truncation"] = truncation_json(cfg.truncation);
  return j;
}

json data_json(const ArrayDataSet& d) {
  return {{"m", d.m()}, {"n", d.n()}, {"tau", d.tau()}, {"physics", to_string(d.physics())}};
}

SimulationOptions options_for(const Preset& p, const ExperimentConfig& cfg) {
  SimulationOptions o = p.options;
  o.jobs = cfg.jobs;
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ExperimentConfig resolve_config(const Overrides& o) {
  ExperimentConfig cfg;
  if (o.config && o.preset) throw ValidationError("use either --config or --preset, not both");
  if (o.config)
    cfg = load_config(*o.config);
  else if (o.preset)
    cfg = preset_config(*o.preset);
  else
    throw ValidationError("an experiment needs --config or --preset");
  if (o.noise_percent) cfg.noise_percent = *o.noise_percent;
  if (o.seed) cfg.seed = *o.seed;
  if (o.theta && o.rank) throw ValidationError("use either --theta or --rank, not both");
  if (o.theta) {
    if (!(*o.theta >= 0.0)) throw ValidationError("--theta must be nonnegative");
    cfg.truncation = TruncationSpec::threshold(*o.theta);
  }
  if (o.rank) {
    if (*o.rank == 0) throw ValidationError("--rank must be positive");
    cfg.truncation = TruncationSpec::rank(*o.rank);
  }
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.out) cfg.out_dir = *o.out;
  cfg.validate();
  return cfg;
}

json cmd_simulate(const ExperimentConfig& cfg, bool with_oracle) {
  const auto t0 = std::chrono::steady_clock::now();
  Preset p = build_experiment(cfg);
  const SimulationOptions opts = options_for(p, cfg);
  ensure_dir(cfg.out_dir);

  json manifest;
  manifest["command"] = "simulate";
  manifest["config"] = config_json(cfg);
  json outputs;

  ArrayDataSet data;
  if (with_oracle) {
    BornOracle oracle = born_oracle(p.medium, p.sensors, opts);
    write_adf1(cfg.out_dir / "born.adf", oracle.born);
    write_adf1(cfg.out_dir / "background.adf", oracle.background);
    outputs["born"] = "born.adf";
    outputs["background"] = "background.adf";
  }
  SimulationResult sim = simulate(p.medium, p.sensors, opts);
  data = std::move(sim.data);
  manifest["simulation"] = {{"grid", {{"nx", sim.grid.nx}, {"nz", sim.grid.nz}, {"h", sim.grid.hx}}},
                            {"padding", {{"left", sim.pad_left}, {"right", sim.pad_right}, {"bottom", sim.pad_bottom}}},
                            {"substeps", sim.substeps},
                            {"raw_asymmetry", sim.raw_asymmetry},
                            {"geometry_hash", data.geometry_hash}};
  if (cfg.noise_percent > 0.0) {
    write_adf1(cfg.out_dir / "clean.adf", data);
    outputs["clean"] = "clean.adf";
    data = add_noise(data, cfg.noise_percent, cfg.seed);
    manifest["noise_std"] = data.noise.std_dev;
  }
  write_adf1(cfg.out_dir / "data.adf", data);
  outputs["data"] = "data.adf";
  manifest["data"] = data_json(data);
  manifest["outputs"] = outputs;
  manifest["seconds"] = seconds_since(t0);
  write_json(cfg.out_dir / "manifest.json", manifest);
  return manifest;
}

json cmd_dtb(const fs::path& measured_path, const ExperimentConfig& cfg, bool unregularized) {
  const auto t0 = std::chrono::steady_clock::now();
  ArrayDataSet measured = read_adf1(measured_path);
  Preset p = build_experiment(cfg);
  if (physics_of(p.medium) != measured.physics())
    throw ValidationError("measured data are " + to_string(measured.physics()) + ", the configured background is " +
                          to_string(physics_of(p.medium)));
  if (p.options.n != measured.n() || p.options.tau != measured.tau())
    throw ValidationError("measured data (n=" + std::to_string(measured.n()) + ", tau=" + std::to_string(measured.tau()) +
                          ") do not match the configured timing (n=" + std::to_string(p.options.n) +
                          ", tau=" + std::to_string(p.options.tau) + ")");
  SimulationOptions opts = options_for(p, cfg);
  ArrayDataSet reference = simulate_data(reference_of(p.medium), p.sensors, opts);
  require_compatible(measured, reference);
  ensure_dir(cfg.out_dir);

  DtbResult r;
  TruncationSpec spec = cfg.truncation;
  if (unregularized) {
    r = dtb_unregularized(measured, reference);
  } else {
    DtbConfig dc;
    dc.reference = reference;
    dc.spec = spec;
    if (spec.is_automatic() && cfg.noise_percent > 0.0) dc.spec.noise_std = cfg.noise_percent / 100.0 * measured.max_abs();
    r = dtb_transform(measured, dc);
  }
  write_adf1(cfg.out_dir / "born.adf", r.born);
  write_adf1(cfg.out_dir / "reference.adf", r.reference_rom_data);

  const DtbProvenance& pv = r.provenance;
  json manifest;
  manifest["command"] = "dtb";
  manifest["measured"] = measured_path.string();
  manifest["config"] = config_json(cfg);
  manifest["regularized"] = pv.regularized;
  manifest["theta"] = pv.theta;
  manifest["z"] = pv.blocks;
  manifest["n"] = pv.n;
  manifest["tail_mass"] = pv.tail_mass;
  manifest["rank_reductions"] = pv.rank_reductions;
  manifest["spectrum"] = pv.spectrum;
  manifest["reference_fit"] = compute_misfit(r.reference_rom_data, reference).aggregate;
  json timings = json::array();
  for (const StepTiming& t : pv.timings) timings.push_back({{"step", t.step}, {"name", t.name}, {"seconds", t.seconds}});
  manifest["timings"] = timings;
  manifest["outputs"] = {{"born", "born.adf"}, {"reference", "reference.adf"}};
  manifest["seconds"] = seconds_since(t0);
  write_json(cfg.out_dir / "manifest.json", manifest);
  return manifest;
}

MisfitReport cmd_compare(const fs::path& a, const fs::path& b, const fs::path& out_dir) {
  MisfitReport r = compute_misfit(read_adf1(a), read_adf1(b));
  ensure_dir(out_dir);
  json j = to_json(r);
  j["a"] = a.string();
  j["b"] = b.string();
  write_json(out_dir / "misfit.json", j);
  std::ofstream csv(out_dir / "misfit.csv");
  if (!csv) throw IoError("cannot write " + (out_dir / "misfit.csv").string());
  write_misfit_csv(csv, r);
  return r;
}

std::vector<double> cmd_spectrum(const fs::path& data, const fs::path& out) {
  ArrayDataSet d = read_adf1(data);
  std::vector<double> ev = sym_eig_desc(assemble_mass(d)).eigenvalues;
  if (out.empty()) {
    write_spectrum_csv(std::cout, ev);
  } else {
    if (out.has_parent_path()) ensure_dir(out.parent_path());
    std::ofstream f(out);
    if (!f) throw IoError("cannot write " + out.string());
    write_spectrum_csv(f, ev);
  }
  return ev;
}

std::vector<double> channel_scales(const std::vector<std::string>& specs, std::size_t m, Physics physics) {
  std::vector<double> scale(m, 1.0);
  for (const std::string& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ValidationError("--amplify-channel expects name=factor, got '" + s + "'");
    const std::string name = s.substr(0, eq);
    double factor = 0.0;
    try {
      std::size_t used = 0;
      factor = std::stod(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ValidationError("bad amplification factor in '" + s + "'");
    }
    if (name == "horizontal" || name == "vertical") {
      if (physics != Physics::kElastic) throw ValidationError("'" + name + "' channels exist only in elastic data");
      const std::size_t half = m / 2;
      const std::size_t lo = name == "horizontal" ? 0 : half;
      for (std::size_t c = lo; c < lo + half; ++c) scale[c] *= factor;
    } else {
      std::size_t c = 0;
      try {
        std::size_t used = 0;
        c = std::stoul(name, &used);
        if (used != name.size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        throw ValidationError("unknown channel '" + name + "'");
      }
      if (c >= m) throw ValidationError("channel " + name + " out of range (m = " + std::to_string(m) + ")");
      scale[c] *= factor;
    }
  }
  return scale;
}

void cmd_export_gather(const fs::path& data, std::size_t source, const std::vector<std::string>& amplify,
                       const fs::path& out) {
  ArrayDataSet d = read_adf1(data);
  if (source >= d.m()) throw ValidationError("source " + std::to_string(source) + " out of range (m = " + std::to_string(d.m()) + ")");
  const std::vector<double> scale = channel_scales(amplify, d.m(), d.physics());
  if (out.empty()) {
    write_gather_csv(std::cout, d, source, scale);
    return;
  }
  if (out.has_parent_path()) ensure_dir(out.parent_path());
  std::ofstream f(out);
  if (!f) throw IoError("cannot write " + out.string());
  write_gather_csv(f, d, source, scale);
}

}  // namespace romdtb::cli
