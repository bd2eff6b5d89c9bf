#pragma once

// Stochastic collision scheduling and the five-phase reference experiment:
// seeded deterministic draws, per-phase impact durations, alternating free
// evolution and collision maps, sampling and snapshots.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wellsim/histories.hpp"

namespace wellsim {

// Deterministic random stream. std::mt19937_64 has a standard-specified
// output sequence, and every mapping below consumes exactly one engine draw,
// so a seed pins the whole draw sequence on any platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0,1) from the top 53 bits of one draw.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// One draw; true with probability 1/2 (low bit).
  bool coin() { return (next_u64() & 1ULL) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct PhaseSpec {
  int n_collisions = 0;
  double t1 = 0.0;
  double t2 = 0.0;
  bool interaction_on = true;  // off forces t1 = t2 = 0
  WeightMode mode = WeightMode::Amplitude;
  double interval_base = 120.0;
  double interval_jitter = 20.0;
  std::string label;
};

// How the two perturbed sides are assigned per collision. Independent draws
// model uncorrelated incidence on each molecule; Shared and Mirrored model a
// single mutual collision event with one random orientation (same facing
// side, respectively opposite facing sides); Fixed* pin both sides.
enum class SidePolicy { Independent, Shared, Mirrored, FixedLeft, FixedRight };

enum class SystemKind { Pair, Single };
enum class TerminalWell { Left, Right, Mixed };

struct MoleculeConfig {
  Frequencies freq{100.0, 1e-3, 10.0};
  // Initial energy amplitudes; the default puts the molecule in the right
  // well at t = 0.
  EnergyAmplitudes amps{cplx{0.7071067811865476, 0.0},
                        cplx{0.7071067811865476, 0.0}};
};

struct RunConfig {
  SystemKind system = SystemKind::Pair;
  MoleculeConfig mol_a;
  MoleculeConfig mol_b;
  std::vector<PhaseSpec> phases;
  std::uint64_t seed = 0;
  double sample_interval = 10.0;
  WeightMode mode = WeightMode::Amplitude;  // default for phases
  SidePolicy side_policy = SidePolicy::Independent;
  bool perturb_both = true;
  std::string output_dir = "wellsim_out";
};

struct Sample {
  double time = 0.0;
  double reduced_left_a = 0.0;
  double reduced_left_b = 0.0;  // zero in single-molecule runs
  double score = 0.0;           // max diagonal of the full density matrix
  double purity_a = 0.0;        // reduced purity (pair); full purity (single)
  double purity_b = 0.0;        // zero in single-molecule runs
  double contraction = 1.0;     // most recent collision's pre-norm norm
  double state_norm = 1.0;
  int phase_index = -1;
};

// Full density matrix at one instant; dim is 2 or 4 and rho uses the first
// dim*dim entries, row-major.
struct Snapshot {
  std::string label;
  double time = 0.0;
  std::size_t dim = 4;
  std::array<cplx, 16> rho{};
};

// Post-collision observation: the localisation score right after one
// collision map was applied.
struct CollisionSample {
  double time = 0.0;
  double score = 0.0;
  double contraction = 1.0;
  int phase_index = -1;
};

struct RunRecord {
  std::vector<Sample> samples;         // strictly increasing times
  std::vector<CollisionSample> collisions;  // one entry per collision
  std::vector<Snapshot> snapshots;     // one per phase boundary
  Snapshot terminal;                   // state at the end of the run
  Snapshot time_average;               // entrywise mean over all samples
  TerminalWell terminal_a = TerminalWell::Mixed;
  TerminalWell terminal_b = TerminalWell::Mixed;
  std::vector<std::string> phase_labels;
  RunConfig config_echo;
};

/// base + u with u uniform on [-jitter, +jitter]; consumes exactly one draw.
double next_interval(RngStream& rng, double base, double jitter);

/// Draws one collision event at the next interval after `now`. Fixed draw
/// order: side_a, side_b, branch_source, interval (four draws, always
/// consumed). Sides and source are uniform; side-policy overrides are
/// applied by the caller after drawing.
PairCollisionEvent draw_event(RngStream& rng, const PhaseSpec& phase,
                              double now);

/// The five-phase reference protocol: 40 collisions t1=t2=1/2; 40 with the
/// interaction off; 40 with t1=1/8, t2=3/8; 40 back at t1=t2=1/2; 80 again
/// at t1=1/8, t2=3/8. Intervals 120 +- 20 throughout; labels "a".."e".
std::vector<PhaseSpec> fig1_protocol(WeightMode mode);

/// Throws ValidationError on malformed configs (unnormalised amplitudes,
/// non-positive sample interval, intervals shorter than the collision
/// window, negative durations, ...).
void validate_config(const RunConfig& cfg);

/// Runs the configured experiment: alternates free evolution with drawn
/// collisions, samples on the sample_interval grid, snapshots each phase
/// boundary. Bit-deterministic for a given config.
/// Throws DegenerateBranchError if a collision's branches cancel exactly.
RunRecord run_simulation(const RunConfig& cfg);

}  // namespace wellsim
