#include <benchmark/benchmark.h>

#include "wellsim/runner.hpp"

using namespace wellsim;

namespace {

const Frequencies kRefFreq{100.0, 1e-3, 10.0};

void BM_Eig2(benchmark::State& state) {
  const Mat2 h = perturbed_hamiltonian(kRefFreq, Side::Left);
  for (auto _ : state) benchmark::DoNotOptimize(eig2(h));
}
BENCHMARK(BM_Eig2);

void BM_Propagator(benchmark::State& state) {
  const Mat2 h = free_hamiltonian(kRefFreq);
  double t = 0.0;
  for (auto _ : state) {
    t += 10.0;
    benchmark::DoNotOptimize(propagator(h, t));
  }
}
BENCHMARK(BM_Propagator);

void BM_PairCollision(benchmark::State& state) {
  RngStream rng(1);
  Vec4 psi{};
  for (cplx& c : psi) c = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  psi = normalise(psi).state;
  PairCollisionEvent ev;
  ev.t1 = 0.125;
  ev.t2 = 0.375;
  ev.mode = WeightMode::Probability;
  for (auto _ : state) {
    const auto res = collision_map_pair(psi, kRefFreq, kRefFreq, ev);
    psi = res.psi;
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_PairCollision);

void BM_ReferenceRun(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(fig1_config(seed++)));
  }
}
BENCHMARK(BM_ReferenceRun)->Unit(benchmark::kMillisecond);

void BM_NullEnsembleRun(benchmark::State& state) {
  RunConfig cfg;
  cfg.side_policy = SidePolicy::Independent;
  PhaseSpec p;
  p.n_collisions = 240;
  p.t1 = 0.5;
  p.t2 = 0.5;
  p.label = "null";
  cfg.phases = {p};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(run_simulation(cfg));
  }
}
BENCHMARK(BM_NullEnsembleRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
