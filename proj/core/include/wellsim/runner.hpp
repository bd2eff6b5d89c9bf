#pragma once

// Experiment orchestration behind the CLI: the canonical five-phase
// reference run, seed ensembles and one-parameter sweeps, plus their file
// outputs.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wellsim/config.hpp"
#include "wellsim/output.hpp"

namespace wellsim {

/// The canonical five-phase experiment at omega0 = 100, omega1 = 1e-3,
/// omegaP = 10. Collisions are mutual events: one random orientation per
/// collision perturbs the facing side of both molecules (shared side
/// policy), and branch weights default to probability mode; this is the
/// configuration that reproduces the reference phenomenology (rapid
/// localisation, terminal stickiness, matched terminal wells).
RunConfig fig1_config(std::uint64_t seed,
                      WeightMode mode = WeightMode::Probability);

/// run + write_bundle in one step.
OutputBundle run_and_write(const RunConfig& cfg,
                           const std::filesystem::path& dir);

struct EnsembleResult {
  EnsembleSummary summary;
  std::vector<double> terminal_scores;  // indexed by seed
  std::vector<std::pair<TerminalWell, TerminalWell>> terminal_wells;
};

/// Runs seeds 0..n_seeds-1 of `base` (overriding base.seed) and aggregates.
EnsembleResult run_ensemble(const RunConfig& base, std::size_t n_seeds,
                            double score_threshold);

enum class SweepParameter { Omega1, OmegaP, T1, T2, Mode };

/// Accepts omega1, omegap, t1, t2, mode. Throws ConfigError otherwise.
SweepParameter parse_sweep_parameter(const std::string& name);

struct SweepPoint {
  std::string value;
  double localisation_rate = 0.0;
  double mean_terminal_score = 0.0;
};

/// One ensemble per value. omega1/omegap apply to both molecules; t1/t2 to
/// every interaction-on phase; mode to the run default and every phase.
std::vector<SweepPoint> run_sweep(const RunConfig& base, SweepParameter param,
                                  const std::vector<std::string>& values,
                                  std::size_t n_seeds, double score_threshold);

RunConfig apply_sweep_value(const RunConfig& base, SweepParameter param,
                            const std::string& value);

std::string ensemble_summary_text(const EnsembleResult& res,
                                  double score_threshold);
std::string ensemble_per_seed_csv(const EnsembleResult& res);
std::string sweep_csv(SweepParameter param,
                      const std::vector<SweepPoint>& points);

/// ensemble_summary.txt + ensemble_per_seed.csv under `dir`.
std::pair<std::filesystem::path, std::filesystem::path> write_ensemble(
    const EnsembleResult& res, double score_threshold,
    const std::filesystem::path& dir);

/// sweep.csv under `dir`.
std::filesystem::path write_sweep(SweepParameter param,
                                  const std::vector<SweepPoint>& points,
                                  const std::filesystem::path& dir);

}  // namespace wellsim
