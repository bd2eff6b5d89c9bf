#pragma once

// File outputs for completed runs. All writers are pure functions of the
// record, floats carry 17 significant digits, and identical records produce
// byte-identical files.
//
//  - timeseries.csv: one row per sample, columns
//      time, reduced_left_A, reduced_left_B, localisation_score,
//      purity_A, purity_B, norm_contraction, phase_label
//  - snapshot_<label>.txt: header line, then one matrix row per line with
//      entries formatted "re<sign>im" + "i"
//  - summary.txt: terminal score/wells and run shape
//  - config_echo.cfg: the effective config; feeding it back reproduces the
//      run exactly

#include <filesystem>
#include <vector>

#include "wellsim/analysis.hpp"

namespace wellsim {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputBundle {
  std::filesystem::path timeseries;
  std::vector<std::filesystem::path> snapshots;
  std::filesystem::path summary;
  std::filesystem::path config_echo;
};

/// %.17g — round-trips doubles exactly.
std::string format_g17(double x);

std::string timeseries_csv(const RunRecord& rec);
std::string snapshot_text(const Snapshot& snap);
std::string summary_text(const RunRecord& rec);

/// Writes the bundle under `dir` (created if needed). Throws IoError.
OutputBundle write_bundle(const RunRecord& rec,
                          const std::filesystem::path& dir);

}  // namespace wellsim
