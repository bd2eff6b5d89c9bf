#include "wellsim/pair.hpp"

#include <numbers>

#include "doctest.h"
#include "test_support.hpp"
#include "wellsim/analysis.hpp"
#include "wellsim/histories.hpp"

using namespace wellsim;
using testsup::max_entry_distance;

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Frequencies kRefFreq{100.0, 1e-3, 10.0};
}  // namespace

TEST_CASE("product_state basis bookkeeping") {
  const Vec2 left = {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  const PairState ll = product_state(left, left);
  CHECK(ll.psi[0] == cplx{1.0, 0.0});
  CHECK(std::abs(ll.psi[1]) + std::abs(ll.psi[2]) + std::abs(ll.psi[3]) ==
        0.0);

  RngStream rng(3);
  const Vec2 a = testsup::random_state<2>(rng);
  const Vec2 b = testsup::random_state<2>(rng);
  const PairState s = product_state(a, b);
  CHECK(norm(s.psi) == doctest::Approx(1.0).epsilon(1e-12));

  // Joint probabilities are the products of the factor probabilities.
  const Mat4 rho = pair_density_matrix(s);
  CHECK(rho[0][0].real() ==
        doctest::Approx(std::norm(a[0]) * std::norm(b[0])).epsilon(1e-12));
  CHECK(rho[3][3].real() ==
        doctest::Approx(std::norm(a[1]) * std::norm(b[1])).epsilon(1e-12));
}

TEST_CASE("product of two ground states carries quarter weights") {
  const EnergyAmplitudes ground{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  const Vec2 factor = energy_to_spatial(ground, kRefFreq, 0.0);
  const PairState s = product_state(factor, factor);
  // Factor amplitudes are -+1/sqrt2, so every joint amplitude is +-1/2.
  const double signs[4] = {1.0, -1.0, -1.0, 1.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(s.psi[i].real() == doctest::Approx(0.5 * signs[i]).epsilon(1e-14));
    CHECK(std::abs(s.psi[i].imag()) < 1e-14);
  }
}

TEST_CASE("evolve_pair_free keeps product states product") {
  RngStream rng(9);
  const PairState s = product_state(testsup::random_state<2>(rng),
                                    testsup::random_state<2>(rng));
  CHECK(max_entry_distance(evolve_pair_free(s, kRefFreq, kRefFreq, 0.0).psi,
                           s.psi) == 0.0);

  const PairState evolved = evolve_pair_free(s, kRefFreq, kRefFreq, 513.0);
  CHECK(evolved.time == doctest::Approx(513.0));
  const Mat4 rho = pair_density_matrix(evolved);
  CHECK(purity(partial_trace(rho, MoleculeId::A)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(partial_trace(rho, MoleculeId::B)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pair free evolution beats with the single-molecule period") {
  // Both reduced left populations follow 1/2 - ab cos(w1 t) of their factor.
  const Vec2 start = energy_to_spatial(
      {cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0}}, kRefFreq, 0.0);
  PairState s = product_state(start, start);
  const double quarter = 0.5 * std::numbers::pi / 1e-3;
  s = evolve_pair_free(s, kRefFreq, kRefFreq, quarter);
  CHECK(reduced_left_population(s, MoleculeId::A) ==
        doctest::Approx(0.5).epsilon(1e-10));
  s = evolve_pair_free(s, kRefFreq, kRefFreq, quarter);
  CHECK(reduced_left_population(s, MoleculeId::A) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(reduced_left_population(s, MoleculeId::B) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pair_density_matrix basis case and snapshot structure") {
  const Vec2 left = {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  const Mat4 rho = pair_density_matrix(product_state(left, left));
  CHECK(rho[0][0] == cplx{1.0, 0.0});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i || j) CHECK(std::abs(rho[i][j]) == 0.0);
}

TEST_CASE("reduced_left_population cases") {
  const Vec2 left = {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  const Vec2 right = {cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  CHECK(reduced_left_population(product_state(left, right), MoleculeId::A) ==
        1.0);
  CHECK(reduced_left_population(product_state(left, right), MoleculeId::B) ==
        0.0);

  PairState bell;
  bell.psi = {cplx{kInvSqrt2, 0.0}, {}, {}, cplx{kInvSqrt2, 0.0}};
  CHECK(reduced_left_population(bell, MoleculeId::A) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(reduced_left_population(bell, MoleculeId::B) ==
        doctest::Approx(0.5).epsilon(1e-15));

  // Product states reduce to the factor's own population.
  RngStream rng(21);
  const Vec2 a = testsup::random_state<2>(rng);
  const Vec2 b = testsup::random_state<2>(rng);
  CHECK(reduced_left_population(product_state(a, b), MoleculeId::A) ==
        doctest::Approx(std::norm(a[0])).epsilon(1e-12));
  CHECK(reduced_left_population(product_state(a, b), MoleculeId::B) ==
        doctest::Approx(std::norm(b[0])).epsilon(1e-12));
}

TEST_CASE("trace and Hermiticity survive a random collision sequence") {
  RngStream rng(27);
  Vec4 psi = product_state(testsup::random_state<2>(rng),
                           testsup::random_state<2>(rng))
                 .psi;
  for (int step = 0; step < 60; ++step) {
    PairState s{psi, 0.0};
    psi = evolve_pair_free(s, kRefFreq, kRefFreq,
                           rng.uniform(50.0, 150.0))
              .psi;
    PairCollisionEvent ev;
    ev.side_a = rng.coin() ? Side::Right : Side::Left;
    ev.side_b = rng.coin() ? Side::Right : Side::Left;
    ev.branch_source = rng.coin() ? MoleculeId::B : MoleculeId::A;
    ev.t1 = 0.125;
    ev.t2 = 0.375;
    ev.mode = WeightMode::Amplitude;
    psi = collision_map_pair(psi, kRefFreq, kRefFreq, ev).psi;

    const Mat4 rho = outer(psi);
    CHECK(std::abs(trace(rho) - cplx{1.0, 0.0}) < 1e-10);
    CHECK(is_hermitian(rho, 1e-10));
    double diag_sum = 0.0;
    for (int i = 0; i < 4; ++i) diag_sum += rho[i][i].real();
    CHECK(diag_sum == doctest::Approx(1.0).epsilon(1e-10));
  }
}
