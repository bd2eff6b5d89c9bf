#include "wellsim/runner.hpp"

#include <fstream>
#include <sstream>

namespace wellsim {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string sweep_parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::Omega1:
      return "omega1";
    case SweepParameter::OmegaP:
      return "omegap";
    case SweepParameter::T1:
      return "t1";
    case SweepParameter::T2:
      return "t2";
    case SweepParameter::Mode:
      return "mode";
  }
  return "omega1";
}

double parse_sweep_double(const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigError("sweep value is not a number: '" + value + "'");
  }
  if (used != value.size())
    throw ConfigError("sweep value is not a number: '" + value + "'");
  return out;
}

}  // namespace

RunConfig fig1_config(std::uint64_t seed, WeightMode mode) {
  RunConfig cfg;
  cfg.system = SystemKind::Pair;
  cfg.seed = seed;
  cfg.mode = mode;
  cfg.side_policy = SidePolicy::Shared;
  cfg.phases = fig1_protocol(mode);
  return cfg;
}

OutputBundle run_and_write(const RunConfig& cfg,
                           const std::filesystem::path& dir) {
  return write_bundle(run_simulation(cfg), dir);
}

EnsembleResult run_ensemble(const RunConfig& base, std::size_t n_seeds,
                            double score_threshold) {
  if (n_seeds == 0) throw ValidationError("ensemble needs at least one seed");
  EnsembleResult res;
  std::vector<RunRecord> records;
  records.reserve(n_seeds);
  for (std::size_t s = 0; s < n_seeds; ++s) {
    RunConfig cfg = base;
    cfg.seed = s;
    records.push_back(run_simulation(cfg));
    res.terminal_scores.push_back(records.back().samples.back().score);
    res.terminal_wells.emplace_back(records.back().terminal_a,
                                    records.back().terminal_b);
  }
  res.summary = summarise_ensemble(records, score_threshold);
  return res;
}

SweepParameter parse_sweep_parameter(const std::string& name) {
  if (name == "omega1") return SweepParameter::Omega1;
  if (name == "omegap") return SweepParameter::OmegaP;
  if (name == "t1") return SweepParameter::T1;
  if (name == "t2") return SweepParameter::T2;
  if (name == "mode") return SweepParameter::Mode;
  throw ConfigError("unknown sweep parameter '" + name +
                    "' (expected omega1, omegap, t1, t2 or mode)");
}

RunConfig apply_sweep_value(const RunConfig& base, SweepParameter param,
                            const std::string& value) {
  RunConfig cfg = base;
  switch (param) {
    case SweepParameter::Omega1: {
      const double v = parse_sweep_double(value);
      cfg.mol_a.freq.omega1 = v;
      cfg.mol_b.freq.omega1 = v;
      break;
    }
    case SweepParameter::OmegaP: {
      const double v = parse_sweep_double(value);
      cfg.mol_a.freq.omegaP = v;
      cfg.mol_b.freq.omegaP = v;
      break;
    }
    case SweepParameter::T1: {
      const double v = parse_sweep_double(value);
      for (PhaseSpec& p : cfg.phases)
        if (p.interaction_on) p.t1 = v;
      break;
    }
    case SweepParameter::T2: {
      const double v = parse_sweep_double(value);
      for (PhaseSpec& p : cfg.phases)
        if (p.interaction_on) p.t2 = v;
      break;
    }
    case SweepParameter::Mode: {
      const WeightMode m = parse_weight_mode(value);
      cfg.mode = m;
      for (PhaseSpec& p : cfg.phases) p.mode = m;
      break;
    }
  }
  validate_config(cfg);
  return cfg;
}

std::vector<SweepPoint> run_sweep(const RunConfig& base, SweepParameter param,
                                  const std::vector<std::string>& values,
                                  std::size_t n_seeds,
                                  double score_threshold) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<SweepPoint> points;
  for (const std::string& value : values) {
    const RunConfig cfg = apply_sweep_value(base, param, value);
    const EnsembleResult res = run_ensemble(cfg, n_seeds, score_threshold);
    points.push_back(
        {value, res.summary.localisation_rate, res.summary.mean_terminal_score});
  }
  return points;
}

std::string ensemble_summary_text(const EnsembleResult& res,
                                  double score_threshold) {
  const EnsembleSummary& s = res.summary;
  std::ostringstream out;
  out << "n_runs: " << s.n_runs << '\n';
  out << "score_threshold: " << format_g17(score_threshold) << '\n';
  out << "localisation_rate: " << format_g17(s.localisation_rate) << '\n';
  out << "mean_terminal_score: " << format_g17(s.mean_terminal_score) << '\n';
  out << "left_fraction: " << format_g17(s.left_fraction) << '\n';
  out << "right_fraction: " << format_g17(s.right_fraction) << '\n';
  out << "same_well_fraction: " << format_g17(s.same_well_fraction) << '\n';
  out << snapshot_text(s.averaged_density_matrix);
  return out.str();
}

std::string ensemble_per_seed_csv(const EnsembleResult& res) {
  std::ostringstream out;
  out << "seed,terminal_score,terminal_well_A,terminal_well_B\n";
  for (std::size_t s = 0; s < res.terminal_scores.size(); ++s) {
    out << s << ',' << format_g17(res.terminal_scores[s]) << ','
        << to_string(res.terminal_wells[s].first) << ','
        << to_string(res.terminal_wells[s].second) << '\n';
  }
  return out.str();
}

std::string sweep_csv(SweepParameter param,
                      const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << "parameter,value,localisation_rate,mean_terminal_score\n";
  for (const SweepPoint& p : points) {
    out << sweep_parameter_name(param) << ',' << p.value << ','
        << format_g17(p.localisation_rate) << ','
        << format_g17(p.mean_terminal_score) << '\n';
  }
  return out.str();
}

std::pair<std::filesystem::path, std::filesystem::path> write_ensemble(
    const EnsembleResult& res, double score_threshold,
    const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());
  const auto summary = dir / "ensemble_summary.txt";
  const auto per_seed = dir / "ensemble_per_seed.csv";
  write_file(summary, ensemble_summary_text(res, score_threshold));
  write_file(per_seed, ensemble_per_seed_csv(res));
  return {summary, per_seed};
}

std::filesystem::path write_sweep(SweepParameter param,
                                  const std::vector<SweepPoint>& points,
                                  const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());
  auto path = dir / "sweep.csv";
  write_file(path, sweep_csv(param, points));
  return path;
}

}  // namespace wellsim
