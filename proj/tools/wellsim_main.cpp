// wellsim command-line front end.
//
// Subcommands:
//   run       execute one configured run, write its output bundle
//   fig1      the canonical five-phase reference experiment
//   ensemble  run seeds 0..N-1 of a config and aggregate
//   sweep     one ensemble per value of a single parameter
//
// Exit codes: 0 success, 1 usage/config error, 2 degenerate-run abort,
// 3 I/O error. WELLSIM_OUT_DIR overrides every output-directory setting.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wellsim/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitIo = 3;

std::filesystem::path resolve_out_dir(const std::string& flag_value,
                                      const std::string& config_value) {
  if (const char* env = std::getenv("WELLSIM_OUT_DIR"); env && *env)
    return env;
  if (!flag_value.empty()) return flag_value;
  return config_value;
}

void report_bundle(const wellsim::OutputBundle& bundle) {
  std::cout << "timeseries: " << bundle.timeseries.string() << '\n';
  for (const auto& s : bundle.snapshots)
    std::cout << "snapshot:   " << s.string() << '\n';
  std::cout << "summary:    " << bundle.summary.string() << '\n';
  std::cout << "config:     " << bundle.config_echo.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic-collision simulator of double-well two-level "
               "systems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::size_t n_seeds = 50;
  double threshold = 0.8;
  std::string mode_name = "probability";
  std::string param_name;
  std::vector<std::string> values;

  auto* run_cmd = app.add_subcommand("run", "Execute one configured run");
  run_cmd->add_option("--config", config_path, "Config file path")
      ->required();
  run_cmd->add_option("--seed", seed, "Override the config seed");
  run_cmd->add_option("--out", out_dir, "Output directory");

  auto* fig1_cmd =
      app.add_subcommand("fig1", "Run the five-phase reference experiment");
  fig1_cmd->add_option("--seed", seed, "Run seed");
  fig1_cmd->add_option("--mode", mode_name,
                       "Weight mode: amplitude, probability or "
                       "projected_branch");
  fig1_cmd->add_option("--out", out_dir, "Output directory");

  auto* ens_cmd =
      app.add_subcommand("ensemble", "Run seeds 0..N-1 and aggregate");
  ens_cmd->add_option("--config", config_path, "Config file path")
      ->required();
  ens_cmd->add_option("--n-seeds", n_seeds, "Number of seeds")->required();
  ens_cmd->add_option("--threshold", threshold,
                      "Localisation score threshold");
  ens_cmd->add_option("--out", out_dir, "Output directory");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "One ensemble per parameter value");
  sweep_cmd->add_option("--config", config_path, "Config file path")
      ->required();
  sweep_cmd
      ->add_option("--param", param_name,
                   "Parameter: omega1, omegap, t1, t2 or mode")
      ->required();
  sweep_cmd->add_option("--values", values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--n-seeds", n_seeds, "Number of seeds per value");
  sweep_cmd->add_option("--threshold", threshold,
                        "Localisation score threshold");
  sweep_cmd->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      wellsim::RunConfig cfg = wellsim::load_config_file(config_path);
      if (run_cmd->count("--seed") > 0) cfg.seed = seed;
      const auto dir = resolve_out_dir(out_dir, cfg.output_dir);
      report_bundle(wellsim::run_and_write(cfg, dir));
    } else if (fig1_cmd->parsed()) {
      const wellsim::WeightMode mode = wellsim::parse_weight_mode(mode_name);
      wellsim::RunConfig cfg = wellsim::fig1_config(seed, mode);
      const auto dir = resolve_out_dir(out_dir, cfg.output_dir);
      report_bundle(wellsim::run_and_write(cfg, dir));
    } else if (ens_cmd->parsed()) {
      wellsim::RunConfig cfg = wellsim::load_config_file(config_path);
      const auto dir = resolve_out_dir(out_dir, cfg.output_dir);
      const auto res = wellsim::run_ensemble(cfg, n_seeds, threshold);
      const auto [summary, per_seed] =
          wellsim::write_ensemble(res, threshold, dir);
      std::cout << "summary:  " << summary.string() << '\n';
      std::cout << "per-seed: " << per_seed.string() << '\n';
    } else if (sweep_cmd->parsed()) {
      wellsim::RunConfig cfg = wellsim::load_config_file(config_path);
      const auto dir = resolve_out_dir(out_dir, cfg.output_dir);
      const auto param = wellsim::parse_sweep_parameter(param_name);
      const auto points =
          wellsim::run_sweep(cfg, param, values, n_seeds, threshold);
      const auto path = wellsim::write_sweep(param, points, dir);
      std::cout << "sweep: " << path.string() << '\n';
    }
  } catch (const wellsim::DegenerateBranchError& e) {
    std::cerr << "degenerate run: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const wellsim::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const wellsim::ValidationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
