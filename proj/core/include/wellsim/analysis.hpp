#pragma once

// Observables and statistics over completed runs: localisation scoring,
// purity, running averages, oscillation-period estimation, ensemble
// aggregation.

#include <span>
#include <vector>

#include "wellsim/protocol.hpp"

namespace wellsim {

// Terminal-well classification thresholds on the reduced left population.
inline constexpr double kWellLeftThreshold = 0.8;
inline constexpr double kWellRightThreshold = 0.2;

inline TerminalWell classify_well(double reduced_left) {
  if (reduced_left > kWellLeftThreshold) return TerminalWell::Left;
  if (reduced_left < kWellRightThreshold) return TerminalWell::Right;
  return TerminalWell::Mixed;
}

/// Maximum diagonal entry (real part) of a density matrix.
template <std::size_t N>
double localisation_score(const Mat<N>& rho) {
  double best = rho[0][0].real();
  for (std::size_t i = 1; i < N; ++i) best = std::max(best, rho[i][i].real());
  return best;
}

/// Tr(rho^2); 1 for pure states, below 1 for reduced states of entangled
/// systems.
template <std::size_t N>
double purity(const Mat<N>& rho) {
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      acc += (rho[i][j] * rho[j][i]).real();
  return acc;
}

/// Entrywise arithmetic mean of a density-matrix stream.
/// Throws ValidationError on an empty stream.
template <std::size_t N>
Mat<N> running_average(const std::vector<Mat<N>>& rhos) {
  if (rhos.empty())
    throw ValidationError("running_average: empty density-matrix stream");
  Mat<N> acc{};
  for (const Mat<N>& r : rhos)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) acc[i][j] += r[i][j];
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      acc[i][j] /= static_cast<double>(rhos.size());
  return acc;
}

/// Oscillation period from successive upward mean-crossings of the series,
/// with linear interpolation between samples. The mean is (max+min)/2.
/// Throws ValidationError if the peak-to-peak amplitude is below 0.1 (no
/// oscillation to measure) or fewer than two upward crossings are found
/// (series shorter than about 1.5 periods).
double rabi_period(std::span<const double> times,
                   std::span<const double> values);

struct EnsembleSummary {
  std::size_t n_runs = 0;
  double localisation_rate = 0.0;   // terminal score >= threshold
  double mean_terminal_score = 0.0;
  Snapshot averaged_density_matrix;  // mean of terminal matrices
  double left_fraction = 0.0;        // over molecule terminals, Mixed counted
  double right_fraction = 0.0;
  double same_well_fraction = 0.0;   // pair runs with both terminals equal
};

/// Aggregates completed runs: localisation rate at `score_threshold`, well
/// frequencies from the terminal classifications, and the mean terminal
/// density matrix. Throws ValidationError on empty or mixed-dimension input.
EnsembleSummary summarise_ensemble(const std::vector<RunRecord>& records,
                                   double score_threshold);

}  // namespace wellsim
