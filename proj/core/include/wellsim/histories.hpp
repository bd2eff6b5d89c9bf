#pragma once

// The history-superposition collision map. An impact raises one well by
// omegaP, but its duration takes two values keyed to whether the perturbed
// well is occupied: the occupied branch lasts t1, the unoccupied branch t2.
// Both branch histories are evolved on the full state, aligned at the common
// window T = max(t1, t2) by appending free evolution to the shorter one,
// then superposed with state-dependent weights and renormalised. For t1 != t2
// the map is non-unitary and non-linear; for t1 == t2 it reduces exactly to
// a unitary collision.

#include "wellsim/pair.hpp"

namespace wellsim {

enum class WeightMode {
  // Branch weights are the spatial amplitudes of the pre-collision state
  // (complex for the single-molecule map, projection norms for the pair).
  Amplitude,
  // Squared amplitudes, renormalised to sum 1.
  Probability,
  // Histories act on the projected components with unit weights; an
  // alternative reading kept for comparison. Norm-preserving in the
  // omega1 -> 0 limit, so it produces no localisation on its own.
  ProjectedBranch,
};

struct BranchSpec {
  Side side = Side::Left;  // which well the impact raises
  double t1 = 0.0;         // occupied-side branch duration
  double t2 = 0.0;         // unoccupied-side branch duration
  WeightMode mode = WeightMode::Amplitude;
};

// One collision on the pair. Each molecule is perturbed on its own side; the
// branch durations are shared between the molecules within a history, and
// the weights come from the branch-source molecule's occupation of its
// perturbed side. With perturb_both = false only the branch-source molecule
// is perturbed (the partner evolves freely over the window) and the map
// provably preserves product states.
struct PairCollisionEvent {
  double time = 0.0;
  Side side_a = Side::Left;
  Side side_b = Side::Left;
  MoleculeId branch_source = MoleculeId::A;
  double t1 = 0.0;
  double t2 = 0.0;
  WeightMode mode = WeightMode::Amplitude;
  bool perturb_both = true;
};

template <std::size_t N>
struct CollisionResult {
  Vec<N> psi{};
  // Norm of the weighted branch superposition before renormalisation;
  // exactly 1 for t1 == t2, and the non-unitarity diagnostic otherwise.
  double contraction = 1.0;
};

/// Single-molecule map: weights are the complex spatial amplitudes
/// (alpha, beta) of psi at the collision instant, keyed so the amplitude of
/// the perturbed side weighs the t1 branch.
/// Throws DegenerateBranchError when the branches cancel exactly.
CollisionResult<2> collision_map_single(const Vec2& psi, const Frequencies& f,
                                        const BranchSpec& spec);

CollisionResult<4> collision_map_pair(const Vec4& psi, const Frequencies& f_a,
                                      const Frequencies& f_b,
                                      const PairCollisionEvent& event);

}  // namespace wellsim
