#include "wellsim/protocol.hpp"

#include <cstring>
#include <numbers>

#include "doctest.h"
#include "test_support.hpp"
#include "wellsim/runner.hpp"

using namespace wellsim;

TEST_CASE("rng streams with the same seed are identical") {
  RngStream a(1234), b(1234);
  for (int k = 0; k < 100; ++k) CHECK(a.next_u64() == b.next_u64());
  RngStream c(1235);
  bool all_equal = true;
  RngStream a2(1234);
  for (int k = 0; k < 10; ++k)
    if (a2.next_u64() != c.next_u64()) all_equal = false;
  CHECK_FALSE(all_equal);
}

TEST_CASE("next_interval stays inside the jitter window") {
  RngStream rng(1);
  for (int k = 0; k < 1000; ++k) {
    const double v = next_interval(rng, 120.0, 20.0);
    CHECK(v >= 100.0);
    CHECK(v <= 140.0);
  }
  CHECK(next_interval(rng, 120.0, 0.0) == 120.0);
}

TEST_CASE("next_interval empirical mean") {
  RngStream rng(2);
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) sum += next_interval(rng, 120.0, 20.0);
  CHECK(std::abs(sum / n - 120.0) < 0.5);
}

TEST_CASE("draw_event distributes sides evenly") {
  RngStream rng(3);
  PhaseSpec phase;
  phase.n_collisions = 1;
  phase.t1 = 0.125;
  phase.t2 = 0.375;
  int left_a = 0;
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const PairCollisionEvent ev = draw_event(rng, phase, 0.0);
    if (ev.side_a == Side::Left) ++left_a;
    CHECK(ev.t1 == 0.125);
    CHECK(ev.t2 == 0.375);
    CHECK(ev.time >= 100.0);
    CHECK(ev.time <= 140.0);
  }
  CHECK(std::abs(static_cast<double>(left_a) / n - 0.5) < 0.02);
}

TEST_CASE("draw_event with the interaction off is a free-evolution marker") {
  RngStream rng(4);
  PhaseSpec phase;
  phase.t1 = 0.5;
  phase.t2 = 0.5;
  phase.interaction_on = false;
  const PairCollisionEvent ev = draw_event(rng, phase, 10.0);
  CHECK(ev.t1 == 0.0);
  CHECK(ev.t2 == 0.0);
  CHECK(ev.time > 10.0);
}

TEST_CASE("draw_event sequences are seed-deterministic") {
  PhaseSpec phase;
  phase.t1 = 0.125;
  phase.t2 = 0.375;
  RngStream a(99), b(99);
  for (int k = 0; k < 50; ++k) {
    const PairCollisionEvent ea = draw_event(a, phase, k * 100.0);
    const PairCollisionEvent eb = draw_event(b, phase, k * 100.0);
    CHECK(ea.side_a == eb.side_a);
    CHECK(ea.side_b == eb.side_b);
    CHECK(ea.branch_source == eb.branch_source);
    CHECK(ea.time == eb.time);
  }
}

TEST_CASE("the five-phase protocol matches the reference schedule") {
  const std::vector<PhaseSpec> phases = fig1_protocol(WeightMode::Probability);
  REQUIRE(phases.size() == 5);
  int total = 0;
  for (const PhaseSpec& p : phases) {
    total += p.n_collisions;
    CHECK(p.interval_base == 120.0);
    CHECK(p.interval_jitter == 20.0);
  }
  CHECK(total == 240);
  CHECK(phases[0].n_collisions == 40);
  CHECK(phases[0].t1 == 0.5);
  CHECK(phases[0].t2 == 0.5);
  CHECK_FALSE(phases[1].interaction_on);
  CHECK(phases[2].t1 == 0.125);
  CHECK(phases[2].t2 == 0.375);
  CHECK(phases[3].t1 == 0.5);
  CHECK(phases[4].n_collisions == 80);
  CHECK(phases[4].label == "e");

  // 240 collisions at ~120 time units each span ~28800 time units, putting
  // the phase boundaries near multiples of 4800.
  const RunRecord rec = run_simulation(fig1_config(7));
  REQUIRE(rec.snapshots.size() == 5);
  const double boundaries[5] = {4800.0, 9600.0, 14400.0, 19200.0, 28800.0};
  for (int i = 0; i < 5; ++i)
    CHECK(std::abs(rec.snapshots[i].time - boundaries[i]) <
          0.05 * boundaries[i]);
}

TEST_CASE("the interaction-off phase is a pure beat at the splitting") {
  // With the interaction off, collisions are identities and the reduced
  // populations follow 1/2 - C cos(w1 t + phi). On an equally spaced grid
  // that means x(t+h) + x(t-h) - 1 = 2 cos(w1 h) (x(t) - 1/2).
  const RunRecord rec = run_simulation(fig1_config(13));
  std::vector<double> b;
  for (const Sample& s : rec.samples)
    if (s.phase_index == 1) b.push_back(s.reduced_left_a);
  REQUIRE(b.size() > 100);
  const double k = 2.0 * std::cos(1e-3 * 10.0);
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    const double lhs = b[i - 1] + b[i + 1] - 1.0;
    const double rhs = k * (b[i] - 0.5);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("zero-phase runs contain only the initial sample") {
  RunConfig cfg;
  const RunRecord rec = run_simulation(cfg);
  REQUIRE(rec.samples.size() == 1);
  CHECK(rec.samples[0].time == 0.0);
  CHECK(rec.snapshots.empty());
  // The default initial state is the right well for both molecules.
  CHECK(rec.samples[0].reduced_left_a == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rec.samples[0].score == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("run records are bit-deterministic per seed") {
  const RunConfig cfg = fig1_config(42);
  const RunRecord r1 = run_simulation(cfg);
  const RunRecord r2 = run_simulation(cfg);
  REQUIRE(r1.samples.size() == r2.samples.size());
  bool identical = true;
  for (std::size_t k = 0; k < r1.samples.size(); ++k) {
    const Sample& x = r1.samples[k];
    const Sample& y = r2.samples[k];
    identical = identical && x.time == y.time &&
                x.reduced_left_a == y.reduced_left_a &&
                x.reduced_left_b == y.reduced_left_b && x.score == y.score &&
                x.purity_a == y.purity_a && x.purity_b == y.purity_b &&
                x.contraction == y.contraction &&
                x.state_norm == y.state_norm;
  }
  CHECK(identical);
  REQUIRE(r1.snapshots.size() == r2.snapshots.size());
  for (std::size_t i = 0; i < r1.snapshots.size(); ++i)
    CHECK(std::memcmp(r1.snapshots[i].rho.data(), r2.snapshots[i].rho.data(),
                      sizeof(r1.snapshots[i].rho)) == 0);

  const RunRecord r3 = run_simulation(fig1_config(43));
  CHECK(r3.samples.back().reduced_left_a != r1.samples.back().reduced_left_a);
}

TEST_CASE("sample times are strictly increasing and norms stay unit") {
  const RunRecord rec = run_simulation(fig1_config(3));
  for (std::size_t k = 1; k < rec.samples.size(); ++k)
    CHECK(rec.samples[k].time > rec.samples[k - 1].time);
  for (const Sample& s : rec.samples) {
    CHECK(std::abs(s.state_norm - 1.0) < 1e-12);
    CHECK(s.score >= 0.25 - 1e-12);
    CHECK(s.score <= 1.0 + 1e-12);
  }
  // ~480 samples per 40-collision phase at sampling interval 10.
  CHECK(rec.samples.size() > 2500);
}

TEST_CASE("a fully destructive collision aborts the run") {
  // Single molecule prepared so the two branch histories cancel exactly
  // at the first impact (zero tunnelling, branch phases a full turn apart).
  RunConfig cfg;
  cfg.system = SystemKind::Single;
  cfg.mol_a.freq = {100.0, 0.0, 10.0};
  cfg.mol_a.amps = {cplx{-1.0, 0.0}, cplx{0.0, 0.0}};
  PhaseSpec phase;
  phase.n_collisions = 5;
  phase.t1 = 0.0;
  phase.t2 = 2.0 * std::numbers::pi / 10.0;
  cfg.phases = {phase};
  cfg.side_policy = SidePolicy::FixedLeft;
  CHECK_THROWS_AS(run_simulation(cfg), DegenerateBranchError);
}

TEST_CASE("config validation rejects malformed runs") {
  RunConfig bad = fig1_config(0);
  bad.sample_interval = 0.0;
  CHECK_THROWS_AS(validate_config(bad), ValidationError);

  bad = fig1_config(0);
  bad.mol_a.amps = {cplx{1.0, 0.0}, cplx{1.0, 0.0}};
  CHECK_THROWS_AS(validate_config(bad), ValidationError);

  // Intervals must not fall below the impact window.
  bad = fig1_config(0);
  bad.phases[2].interval_base = 0.3;
  bad.phases[2].interval_jitter = 0.0;
  CHECK_THROWS_AS(validate_config(bad), ValidationError);

  bad = fig1_config(0);
  bad.phases[0].t1 = -0.5;
  CHECK_THROWS_AS(validate_config(bad), ValidationError);

  bad = fig1_config(0);
  bad.phases[1].t1 = 0.25;  // interaction off but nonzero duration
  CHECK_THROWS_AS(validate_config(bad), ValidationError);

  bad = fig1_config(0);
  bad.phases[0].label = "../evil";  // labels become snapshot file names
  CHECK_THROWS_AS(validate_config(bad), ValidationError);

  CHECK_NOTHROW(validate_config(fig1_config(0)));
}

TEST_CASE("one-molecule collisions keep pair runs unentangled") {
  RunConfig cfg = fig1_config(21);
  cfg.perturb_both = false;
  const RunRecord rec = run_simulation(cfg);
  for (const Sample& s : rec.samples) {
    CHECK(s.purity_a > 1.0 - 1e-9);
    CHECK(s.purity_b > 1.0 - 1e-9);
  }
}

TEST_CASE("side policies constrain the drawn sides") {
  // Shared and mirrored policies tie molecule B's side to molecule A's;
  // verified through the localisation pattern: mirrored collisions drive
  // the molecules into opposite wells.
  RunConfig cfg = fig1_config(11);
  cfg.side_policy = SidePolicy::Mirrored;
  const RunRecord rec = run_simulation(cfg);
  // Terminal weight concentrates on the anti-aligned components |LR>,|RL>.
  const double anti = rec.terminal.rho[1 * 4 + 1].real() +
                      rec.terminal.rho[2 * 4 + 2].real();
  const double aligned = rec.terminal.rho[0].real() +
                         rec.terminal.rho[3 * 4 + 3].real();
  CHECK(anti > aligned);
}
