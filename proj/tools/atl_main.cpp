#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "atl/commands.hpp"
#include "atl/config.hpp"
#include "atl/errors.hpp"
#include "atl/version.hpp"

namespace {

atl::config::RunConfig load(const std::string& config_path,
                            std::uint64_t seed_override, bool has_seed) {
  atl::config::RunConfig cfg = config_path.empty()
                                   ? atl::config::default_config()
                                   : atl::config::load_config(config_path);
  if (has_seed) cfg.rng_seed = seed_override;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"XUV-IR dissociative-ionization asymmetry toolkit"};
  app.set_version_flag("--version", std::string(atl::kToolName) + " " + atl::kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path, out_dir = "out";
  std::uint64_t seed = 0;
  int threads = 0;
  bool csv = false;
  std::string events_path, fit_input;

  app.add_option("--config", config_path, "configuration file (defaults when omitted)");
  app.add_option("--out", out_dir, "output directory");
  auto* seed_opt = app.add_option("--seed", seed, "override the RNG seed");
  app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");

  auto* cmd_model = app.add_subcommand("model", "closed-form asymmetry maps");
  auto* cmd_sim = app.add_subcommand("simulate", "generate synthetic events");
  cmd_sim->add_flag("--csv", csv, "also write the CSV event mirror");
  auto* cmd_analyze = app.add_subcommand("analyze", "reconstruct and histogram events");
  cmd_analyze->add_option("events", events_path, "binary event file")->required();
  auto* cmd_fit = app.add_subcommand("fit", "fit envelopes, oscillations and chirp");
  cmd_fit->add_option("input", fit_input,
                      "summary.json from analyze, or a model map CSV")
      ->required();
  auto* cmd_check = app.add_subcommand("selfcheck", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : atl::commands::kExitUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    const auto cfg = load(config_path, seed, seed_opt->count() > 0);
    if (cmd_model->parsed()) return atl::commands::cmd_model(cfg, out_dir);
    if (cmd_sim->parsed()) return atl::commands::cmd_simulate(cfg, out_dir, csv);
    if (cmd_analyze->parsed())
      return atl::commands::cmd_analyze(cfg, events_path, out_dir);
    if (cmd_fit->parsed()) return atl::commands::cmd_fit(cfg, fit_input, out_dir);
    if (cmd_check->parsed()) return atl::commands::cmd_selfcheck(cfg, std::cout);
  } catch (const atl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return atl::commands::kExitConfig;
  } catch (const atl::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return atl::commands::kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return atl::commands::kExitData;
  }
  return atl::commands::kExitUsage;
}
