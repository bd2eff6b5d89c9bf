#include "wellsim/protocol.hpp"

#include <cmath>
#include <utility>

#include "wellsim/analysis.hpp"

namespace wellsim {

double next_interval(RngStream& rng, double base, double jitter) {
  return base + (2.0 * rng.uniform01() - 1.0) * jitter;
}

PairCollisionEvent draw_event(RngStream& rng, const PhaseSpec& phase,
                              double now) {
  PairCollisionEvent ev;
  ev.side_a = rng.coin() ? Side::Right : Side::Left;
  ev.side_b = rng.coin() ? Side::Right : Side::Left;
  ev.branch_source = rng.coin() ? MoleculeId::B : MoleculeId::A;
  ev.time =
      now + next_interval(rng, phase.interval_base, phase.interval_jitter);
  if (phase.interaction_on) {
    ev.t1 = phase.t1;
    ev.t2 = phase.t2;
  } else {
    ev.t1 = 0.0;
    ev.t2 = 0.0;
  }
  ev.mode = phase.mode;
  return ev;
}

std::vector<PhaseSpec> fig1_protocol(WeightMode mode) {
  const auto phase = [&](int n, double t1, double t2, bool on,
                         std::string label) {
    PhaseSpec p;
    p.n_collisions = n;
    p.t1 = t1;
    p.t2 = t2;
    p.interaction_on = on;
    p.mode = mode;
    p.interval_base = 120.0;
    p.interval_jitter = 20.0;
    p.label = std::move(label);
    return p;
  };
  return {
      phase(40, 0.5, 0.5, true, "a"),     phase(40, 0.0, 0.0, false, "b"),
      phase(40, 0.125, 0.375, true, "c"), phase(40, 0.5, 0.5, true, "d"),
      phase(80, 0.125, 0.375, true, "e"),
  };
}

void validate_config(const RunConfig& cfg) {
  const auto check_molecule = [](const MoleculeConfig& m, const char* name) {
    if (!std::isfinite(m.freq.omega0) || !std::isfinite(m.freq.omega1) ||
        !std::isfinite(m.freq.omegaP))
      throw ValidationError(std::string(name) + ": non-finite frequency");
    if (m.freq.omega1 < 0.0 || m.freq.omegaP < 0.0)
      throw ValidationError(std::string(name) +
                            ": omega1 and omegap must be non-negative");
    const double n2 = std::norm(m.amps.a) + std::norm(m.amps.b);
    if (std::abs(n2 - 1.0) > kUnitNormTol)
      throw ValidationError(std::string(name) +
                            ": initial amplitudes are not normalised");
  };
  check_molecule(cfg.mol_a, "mol_a");
  if (cfg.system == SystemKind::Pair) check_molecule(cfg.mol_b, "mol_b");

  if (!(cfg.sample_interval > 0.0) || !std::isfinite(cfg.sample_interval))
    throw ValidationError("sample_interval must be positive");

  int index = 1;
  for (const PhaseSpec& p : cfg.phases) {
    const std::string where = "phase " + std::to_string(index++);
    if (p.n_collisions < 0)
      throw ValidationError(where + ": negative collision count");
    if (p.t1 < 0.0 || p.t2 < 0.0 || !std::isfinite(p.t1) ||
        !std::isfinite(p.t2))
      throw ValidationError(where + ": invalid branch durations");
    if (!p.interaction_on && (p.t1 != 0.0 || p.t2 != 0.0))
      throw ValidationError(where +
                            ": interaction off requires zero durations");
    if (!(p.interval_base > 0.0))
      throw ValidationError(where + ": interval_base must be positive");
    if (p.interval_jitter < 0.0 || p.interval_jitter > p.interval_base)
      throw ValidationError(where + ": jitter must lie in [0, base]");
    const double window = std::max(p.t1, p.t2);
    if (p.interval_base - p.interval_jitter < window)
      throw ValidationError(
          where + ": collision intervals can fall below the impact window");
    // Labels end up in snapshot file names; an empty label falls back to
    // phase<N> at run time.
    if (p.label.find_first_not_of("abcdefghijklmnopqrstuvwxyz"
                                  "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-") !=
        std::string::npos)
      throw ValidationError(where + ": label must be [A-Za-z0-9_-]*");
  }
}

namespace {

void apply_side_policy(PairCollisionEvent& ev, SidePolicy policy) {
  switch (policy) {
    case SidePolicy::Independent:
      break;
    case SidePolicy::Shared:
      ev.side_b = ev.side_a;
      break;
    case SidePolicy::Mirrored:
      ev.side_b = other_side(ev.side_a);
      break;
    case SidePolicy::FixedLeft:
      ev.side_a = ev.side_b = Side::Left;
      break;
    case SidePolicy::FixedRight:
      ev.side_a = ev.side_b = Side::Right;
      break;
  }
}

template <std::size_t N>
Snapshot make_snapshot(std::string label, double time, const Mat<N>& rho) {
  Snapshot s;
  s.label = std::move(label);
  s.time = time;
  s.dim = N;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s.rho[i * N + j] = rho[i][j];
  return s;
}

template <std::size_t N>
Snapshot mean_snapshot(const std::vector<Mat<N>>& rhos, double time) {
  Mat<N> acc{};
  for (const Mat<N>& r : rhos)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) acc[i][j] += r[i][j];
  const double count = static_cast<double>(rhos.size());
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) acc[i][j] /= count;
  return make_snapshot<N>("time_average", time, acc);
}

// Shared run loop for the pair and single-molecule systems. The System
// policy supplies state advancement, the collision map and per-sample
// observables.
template <typename System>
RunRecord run_loop(const RunConfig& cfg, System sys) {
  RngStream rng(cfg.seed);
  RunRecord rec;
  rec.config_echo = cfg;
  for (std::size_t k = 0; k < cfg.phases.size(); ++k)
    rec.phase_labels.push_back(cfg.phases[k].label.empty()
                                   ? "phase" + std::to_string(k + 1)
                                   : cfg.phases[k].label);

  double t = 0.0;
  double contraction = 1.0;
  std::vector<typename System::Rho> rho_stream;

  const auto record_sample = [&](int phase_index) {
    Sample s = sys.observe(t, contraction);
    s.phase_index = phase_index;
    rho_stream.push_back(sys.density_matrix());
    rec.samples.push_back(s);
  };

  record_sample(cfg.phases.empty() ? -1 : 0);
  double next_sample = cfg.sample_interval;

  int phase_index = 0;
  for (const PhaseSpec& phase : cfg.phases) {
    for (int c = 0; c < phase.n_collisions; ++c) {
      PairCollisionEvent ev = draw_event(rng, phase, t);
      apply_side_policy(ev, cfg.side_policy);
      ev.perturb_both = cfg.perturb_both;
      if (!(ev.time > t))
        throw ValidationError("drawn collision interval is not positive");

      while (next_sample <= ev.time) {
        sys.advance(next_sample - t);
        t = next_sample;
        record_sample(phase_index);
        next_sample += cfg.sample_interval;
      }
      if (ev.time > t) {
        sys.advance(ev.time - t);
        t = ev.time;
      }
      contraction = sys.collide(ev);
      rec.collisions.push_back(
          {t, sys.score(), contraction, phase_index});
    }
    rec.snapshots.push_back(
        make_snapshot(rec.phase_labels[static_cast<std::size_t>(phase_index)],
                      t, sys.density_matrix()));
    ++phase_index;
  }

  // Terminal sample at the end of the run; if the last collision landed
  // exactly on a sample time, the pre-collision sample is replaced by the
  // post-collision one.
  const int last_phase = cfg.phases.empty() ? -1 : phase_index - 1;
  if (rec.samples.back().time == t) {
    Sample s = sys.observe(t, contraction);
    s.phase_index = rec.samples.back().phase_index;
    rec.samples.back() = s;
    rho_stream.back() = sys.density_matrix();
  } else {
    record_sample(last_phase);
  }

  rec.terminal = make_snapshot("terminal", t, sys.density_matrix());
  rec.time_average = mean_snapshot(rho_stream, t);
  const Sample& last = rec.samples.back();
  rec.terminal_a = classify_well(last.reduced_left_a);
  rec.terminal_b = cfg.system == SystemKind::Pair
                       ? classify_well(last.reduced_left_b)
                       : TerminalWell::Mixed;
  return rec;
}

struct PairSystem {
  using Rho = Mat4;

  explicit PairSystem(const RunConfig& cfg)
      : freq_a(cfg.mol_a.freq), freq_b(cfg.mol_b.freq) {
    psi = kron_vec(energy_to_spatial(cfg.mol_a.amps, freq_a, 0.0),
                   energy_to_spatial(cfg.mol_b.amps, freq_b, 0.0));
  }

  void advance(double dt) {
    psi = mat_vec(kron(propagator(free_hamiltonian(freq_a), dt),
                     propagator(free_hamiltonian(freq_b), dt)),
                psi);
  }

  double collide(const PairCollisionEvent& ev) {
    const CollisionResult<4> res = collision_map_pair(psi, freq_a, freq_b, ev);
    psi = res.psi;
    return res.contraction;
  }

  Rho density_matrix() const { return outer(psi); }

  double score() const { return localisation_score(outer(psi)); }

  Sample observe(double t, double contraction) const {
    const Mat4 rho = outer(psi);
    const Mat2 rho_a = trace_out_second(rho);
    const Mat2 rho_b = trace_out_first(rho);
    Sample s;
    s.time = t;
    s.reduced_left_a = rho_a[0][0].real();
    s.reduced_left_b = rho_b[0][0].real();
    s.score = localisation_score(rho);
    s.purity_a = purity(rho_a);
    s.purity_b = purity(rho_b);
    s.contraction = contraction;
    s.state_norm = norm(psi);
    return s;
  }

  Frequencies freq_a, freq_b;
  Vec4 psi;
};

struct SingleSystem {
  using Rho = Mat2;

  explicit SingleSystem(const RunConfig& cfg) : freq(cfg.mol_a.freq) {
    psi = energy_to_spatial(cfg.mol_a.amps, freq, 0.0);
  }

  void advance(double dt) { psi = evolve_free(psi, freq, dt); }

  double collide(const PairCollisionEvent& ev) {
    BranchSpec spec;
    spec.side = ev.side_a;
    spec.t1 = ev.t1;
    spec.t2 = ev.t2;
    spec.mode = ev.mode;
    const CollisionResult<2> res = collision_map_single(psi, freq, spec);
    psi = res.psi;
    return res.contraction;
  }

  Rho density_matrix() const { return outer(psi); }

  double score() const { return localisation_score(outer(psi)); }

  Sample observe(double t, double contraction) const {
    const Mat2 rho = outer(psi);
    Sample s;
    s.time = t;
    s.reduced_left_a = rho[0][0].real();
    s.reduced_left_b = 0.0;
    s.score = localisation_score(rho);
    s.purity_a = purity(rho);
    s.purity_b = 0.0;
    s.contraction = contraction;
    s.state_norm = norm(psi);
    return s;
  }

  Frequencies freq;
  Vec2 psi;
};

}  // namespace

RunRecord run_simulation(const RunConfig& cfg) {
  validate_config(cfg);
  if (cfg.system == SystemKind::Pair)
    return run_loop(cfg, PairSystem(cfg));
  return run_loop(cfg, SingleSystem(cfg));
}

}  // namespace wellsim
