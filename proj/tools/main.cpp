#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "romdtb/cli/commands.hpp"
#include "romdtb/errors.hpp"

namespace {

using namespace romdtb;
using namespace romdtb::cli;

struct Flags {
  std::string config, preset, out;
  double noise_percent = -1.0;
  double theta = -1.0;
  long long rank = -1;
  long long seed = -1;
  int jobs = -1;
};

void add_experiment_flags(CLI::App* cmd, Flags& f, bool truncation) {
  cmd->add_option("--config", f.config, "experiment INI file");
  cmd->add_option("--preset", f.preset, "builtin preset (acoustic-two-inclusions, elastic-two-inclusions, homogeneous-acoustic)");
  cmd->add_option("--noise-percent", f.noise_percent, "noise level in percent of max|D|");
  cmd->add_option("--seed", f.seed, "noise seed");
  cmd->add_option("--jobs", f.jobs, "threads over sources");
  cmd->add_option("--out", f.out, "output directory");
  if (truncation) {
    cmd->add_option("--theta", f.theta, "Gramian eigenvalue threshold");
    cmd->add_option("--rank", f.rank, "number of kept blocks z");
  }
}

Overrides to_overrides(const Flags& f) {
  Overrides o;
  if (!f.config.empty()) o.config = f.config;
  if (!f.preset.empty()) o.preset = f.preset;
  if (f.noise_percent >= 0.0) o.noise_percent = f.noise_percent;
  if (f.seed >= 0) o.seed = static_cast<std::uint64_t>(f.seed);
  if (f.theta >= 0.0) o.theta = f.theta;
  if (f.rank >= 0) o.rank = static_cast<std::size_t>(f.rank);
  if (f.jobs >= 0) o.jobs = f.jobs;
  if (!f.out.empty()) o.out = f.out;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"romdtb: array wave data synthesis and the data-to-Born transform"};
  app.require_subcommand(1);

  Flags sim_flags;
  bool oracle = false;
  auto* sim = app.add_subcommand("simulate", "synthesize array data for a preset or config");
  add_experiment_flags(sim, sim_flags, false);
  sim->add_flag("--oracle", oracle, "also write the Born oracle and background data");

  Flags dtb_flags;
  std::string measured;
  bool unregularized = false;
  auto* dtb = app.add_subcommand("dtb", "map measured data to Born data");
  dtb->add_option("measured", measured, "measured ADF1 file")->required();
  add_experiment_flags(dtb, dtb_flags, true);
  dtb->add_flag("--unregularized", unregularized, "skip spectral truncation");

  std::string cmp_a, cmp_b, cmp_out = ".";
  auto* cmp = app.add_subcommand("compare", "misfit of A against reference B");
  cmp->add_option("a", cmp_a, "ADF1 file A")->required();
  cmp->add_option("b", cmp_b, "reference ADF1 file B")->required();
  cmp->add_option("--out", cmp_out, "output directory");

  std::string spectrum_in, spectrum_out;
  auto* spectrum = app.add_subcommand("spectrum", "Gramian eigenvalues as CSV");
  spectrum->add_option("data", spectrum_in, "ADF1 file")->required();
  spectrum->add_option("--out", spectrum_out, "CSV file (default stdout)");

  std::string gather_in, gather_out;
  std::size_t source = 0;
  std::vector<std::string> amplify;
  auto* gather = app.add_subcommand("export-gather", "one source gather as CSV");
  gather->add_option("data", gather_in, "ADF1 file")->required();
  gather->add_option("--source", source, "source index")->required();
  gather->add_option("--amplify-channel", amplify, "vertical=F, horizontal=F or <channel>=F");
  gather->add_option("--out", gather_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sim) {
      nlohmann::json m = cmd_simulate(resolve_config(to_overrides(sim_flags)), oracle);
      std::cout << "wrote " << m["outputs"].dump() << '\n';
    } else if (*dtb) {
      ExperimentConfig cfg = resolve_config(to_overrides(dtb_flags));
      nlohmann::json m = cmd_dtb(measured, cfg, unregularized);
      std::cout << "z = " << m["z"] << ", theta = " << m["theta"] << ", tail mass = " << m["tail_mass"]
                << ", output in " << cfg.out_dir.string() << '\n';
    } else if (*cmp) {
      MisfitReport r = cmd_compare(cmp_a, cmp_b, cmp_out);
      std::cout << "aggregate misfit " << r.aggregate << ", max entry error " << r.max_entry_error << '\n';
    } else if (*spectrum) {
      cmd_spectrum(spectrum_in, spectrum_out);
    } else if (*gather) {
      cmd_export_gather(gather_in, source, amplify, gather_out);
    }
  } catch (const romdtb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
