#pragma once

// Two molecules A and B as a joint four-level system in the basis
// {|LL>,|LR>,|RL>,|RR>}, molecule A index major. Joint free evolution is
// always the Kronecker product of the factor propagators; no 4x4
// exponential is ever computed.

#include "wellsim/molecule.hpp"

namespace wellsim {

enum class MoleculeId { A, B };

inline MoleculeId other_molecule(MoleculeId m) {
  return m == MoleculeId::A ? MoleculeId::B : MoleculeId::A;
}

struct PairState {
  Vec4 psi{};
  double time = 0.0;
};

PairState product_state(const Vec2& psi_a, const Vec2& psi_b);

PairState evolve_pair_free(const PairState& s, const Frequencies& f_a,
                           const Frequencies& f_b, double dt);

inline Mat4 pair_density_matrix(const PairState& s) { return outer(s.psi); }

/// Reduced density matrix of one molecule (partial trace over the partner).
Mat2 partial_trace(const Mat4& rho, MoleculeId keep);

/// (L,L) entry of the kept molecule's reduced density matrix.
double reduced_left_population(const PairState& s, MoleculeId m);

}  // namespace wellsim
