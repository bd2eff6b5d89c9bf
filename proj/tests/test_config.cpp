#include "wellsim/config.hpp"

#include "doctest.h"

using namespace wellsim;

namespace {

const char* kMinimal = R"(
# one branching phase at the reference parameters
phase1.collisions = 10
phase1.t1 = 0.125
phase1.t2 = 0.375
)";

}  // namespace

TEST_CASE("minimal config fills in documented defaults") {
  const RunConfig cfg = parse_config_text(kMinimal);
  CHECK(cfg.system == SystemKind::Pair);
  CHECK(cfg.seed == 0);
  CHECK(cfg.sample_interval == 10.0);
  CHECK(cfg.mode == WeightMode::Amplitude);
  CHECK(cfg.side_policy == SidePolicy::Independent);
  CHECK(cfg.perturb_both);
  CHECK(cfg.mol_a.freq.omega0 == 100.0);
  CHECK(cfg.mol_a.freq.omega1 == 1e-3);
  CHECK(cfg.mol_a.freq.omegaP == 10.0);
  REQUIRE(cfg.phases.size() == 1);
  CHECK(cfg.phases[0].n_collisions == 10);
  CHECK(cfg.phases[0].interval_base == 120.0);
  CHECK(cfg.phases[0].interval_jitter == 20.0);
  CHECK(cfg.phases[0].mode == WeightMode::Amplitude);
  CHECK(cfg.phases[0].label == "phase1");
}

TEST_CASE("molecule B defaults to molecule A's settings") {
  const RunConfig cfg = parse_config_text(R"(
mol_a.omega1 = 0.01
mol_a.a_re = 1
mol_a.b_re = 0
)");
  CHECK(cfg.mol_b.freq.omega1 == 0.01);
  CHECK(cfg.mol_b.amps.a == cplx{1.0, 0.0});
  CHECK(cfg.mol_b.amps.b == cplx{0.0, 0.0});

  const RunConfig split = parse_config_text(R"(
mol_a.omega1 = 0.01
mol_b.omega1 = 0.02
)");
  CHECK(split.mol_a.freq.omega1 == 0.01);
  CHECK(split.mol_b.freq.omega1 == 0.02);
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_WITH_AS(parse_config_text("run.sede = 7\n"),
                       doctest::Contains("unknown config key"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("phase1.collisions = 5\nphase1.t3 = 1\n"),
                  ConfigError);
}

TEST_CASE("duplicate and malformed keys are rejected") {
  CHECK_THROWS_WITH_AS(parse_config_text("run.seed = 1\nrun.seed = 2\n"),
                       doctest::Contains("duplicate"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("run.seed\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("run.seed = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("run.sample_interval = 1x\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("run.mode = amplitud\n"), ConfigError);
}

TEST_CASE("phases must be contiguous and complete") {
  CHECK_THROWS_AS(parse_config_text(R"(
phase2.collisions = 5
phase2.t1 = 0.1
phase2.t2 = 0.2
)"),
                  ConfigError);
  // t1/t2 required while the interaction is on.
  CHECK_THROWS_AS(parse_config_text("phase1.collisions = 5\n"), ConfigError);
  // ...but not when it is off.
  const RunConfig off = parse_config_text(R"(
phase1.collisions = 5
phase1.interaction = off
)");
  CHECK(off.phases[0].t1 == 0.0);
  CHECK(off.phases[0].t2 == 0.0);
}

TEST_CASE("validation failures surface as config errors") {
  // Interval window shorter than the impact window.
  CHECK_THROWS_AS(parse_config_text(R"(
phase1.collisions = 5
phase1.t1 = 0.125
phase1.t2 = 0.375
phase1.interval_base = 0.25
phase1.interval_jitter = 0
)"),
                  ValidationError);
  // Unnormalised initial amplitudes.
  CHECK_THROWS_AS(parse_config_text("mol_a.a_re = 1\nmol_a.b_re = 1\n"),
                  ValidationError);
}

TEST_CASE("serialize/parse round trip is exact") {
  RunConfig cfg = parse_config_text(R"(
run.system = pair
run.seed = 1234567890123
run.sample_interval = 7.25
run.mode = probability
run.side_policy = shared
mol_a.omega1 = 0.0012345678901234567
phase1.collisions = 3
phase1.t1 = 0.125
phase1.t2 = 0.375
phase1.label = warmup
phase2.collisions = 4
phase2.interaction = off
phase2.mode = projected_branch
)");
  const std::string echo = serialize_config(cfg);
  const RunConfig again = parse_config_text(echo);
  CHECK(serialize_config(again) == echo);
  CHECK(again.seed == 1234567890123ULL);
  CHECK(again.mol_b.freq.omega1 == cfg.mol_a.freq.omega1);
  CHECK(again.phases[0].label == "warmup");
  CHECK(again.phases[1].mode == WeightMode::ProjectedBranch);
}

TEST_CASE("enum names round trip") {
  for (WeightMode m : {WeightMode::Amplitude, WeightMode::Probability,
                       WeightMode::ProjectedBranch})
    CHECK(parse_weight_mode(to_string(m)) == m);
  for (SidePolicy p :
       {SidePolicy::Independent, SidePolicy::Shared, SidePolicy::Mirrored,
        SidePolicy::FixedLeft, SidePolicy::FixedRight})
    CHECK(parse_side_policy(to_string(p)) == p);
}
