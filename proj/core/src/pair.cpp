#include "wellsim/pair.hpp"

namespace wellsim {

PairState product_state(const Vec2& psi_a, const Vec2& psi_b) {
  return {kron_vec(psi_a, psi_b), 0.0};
}

PairState evolve_pair_free(const PairState& s, const Frequencies& f_a,
                           const Frequencies& f_b, double dt) {
  const Mat4 u = kron(propagator(free_hamiltonian(f_a), dt),
                      propagator(free_hamiltonian(f_b), dt));
  return {mat_vec(u, s.psi), s.time + dt};
}

Mat2 partial_trace(const Mat4& rho, MoleculeId keep) {
  return keep == MoleculeId::A ? trace_out_second(rho) : trace_out_first(rho);
}

double reduced_left_population(const PairState& s, MoleculeId m) {
  // Diagonal of the reduced matrix, computed directly from the amplitudes.
  if (m == MoleculeId::A) return std::norm(s.psi[0]) + std::norm(s.psi[1]);
  return std::norm(s.psi[0]) + std::norm(s.psi[2]);
}

}  // namespace wellsim
