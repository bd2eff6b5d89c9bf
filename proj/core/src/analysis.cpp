#include "wellsim/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace wellsim {

double rabi_period(std::span<const double> times,
                   std::span<const double> values) {
  if (times.size() != values.size() || times.size() < 3)
    throw ValidationError("rabi_period: need matching series of length >= 3");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1]))
      throw ValidationError("rabi_period: times must be strictly increasing");

  const auto [min_it, max_it] =
      std::minmax_element(values.begin(), values.end());
  const double amplitude = 0.5 * (*max_it - *min_it);
  if (amplitude < 0.05)
    throw ValidationError("rabi_period: oscillation amplitude below 0.05");
  const double mean = 0.5 * (*max_it + *min_it);

  std::vector<double> crossings;
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    if (values[k] < mean && values[k + 1] >= mean) {
      const double f = (mean - values[k]) / (values[k + 1] - values[k]);
      crossings.push_back(times[k] + f * (times[k + 1] - times[k]));
    }
  }
  if (crossings.size() < 2)
    throw ValidationError(
        "rabi_period: series spans fewer than two upward mean-crossings");
  return (crossings.back() - crossings.front()) /
         static_cast<double>(crossings.size() - 1);
}

EnsembleSummary summarise_ensemble(const std::vector<RunRecord>& records,
                                   double score_threshold) {
  if (records.empty())
    throw ValidationError("summarise_ensemble: no runs to aggregate");
  const std::size_t dim = records.front().terminal.dim;
  for (const RunRecord& r : records)
    if (r.terminal.dim != dim)
      throw ValidationError("summarise_ensemble: mixed run dimensions");

  EnsembleSummary out;
  out.n_runs = records.size();

  std::array<cplx, 16> acc{};
  std::size_t localised = 0;
  std::size_t left = 0, right = 0, terminals = 0, same_well = 0;
  double score_sum = 0.0;
  for (const RunRecord& r : records) {
    const double score = r.samples.back().score;
    score_sum += score;
    if (score >= score_threshold) ++localised;
    for (std::size_t k = 0; k < dim * dim; ++k) acc[k] += r.terminal.rho[k];

    const bool pair = r.config_echo.system == SystemKind::Pair;
    const auto tally = [&](TerminalWell w) {
      ++terminals;
      if (w == TerminalWell::Left) ++left;
      if (w == TerminalWell::Right) ++right;
    };
    tally(r.terminal_a);
    if (pair) {
      tally(r.terminal_b);
      if (r.terminal_a == r.terminal_b && r.terminal_a != TerminalWell::Mixed)
        ++same_well;
    }
  }

  out.localisation_rate =
      static_cast<double>(localised) / static_cast<double>(records.size());
  out.mean_terminal_score = score_sum / static_cast<double>(records.size());
  out.averaged_density_matrix.label = "ensemble_terminal_average";
  out.averaged_density_matrix.time = records.back().terminal.time;
  out.averaged_density_matrix.dim = dim;
  for (std::size_t k = 0; k < dim * dim; ++k)
    out.averaged_density_matrix.rho[k] =
        acc[k] / static_cast<double>(records.size());
  out.left_fraction =
      static_cast<double>(left) / static_cast<double>(terminals);
  out.right_fraction =
      static_cast<double>(right) / static_cast<double>(terminals);
  out.same_well_fraction =
      static_cast<double>(same_well) / static_cast<double>(records.size());
  return out;
}

}  // namespace wellsim
