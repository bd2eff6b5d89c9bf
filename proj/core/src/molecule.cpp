#include "wellsim/molecule.hpp"

#include <numbers>

namespace wellsim {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

Mat2 free_hamiltonian(const Frequencies& f) {
  const cplx half_split{0.5 * f.omega1, 0.0};
  return {{{cplx{f.omega0, 0.0}, half_split},
           {half_split, cplx{f.omega0, 0.0}}}};
}

Mat2 perturbed_hamiltonian(const Frequencies& f, Side side) {
  Mat2 h = free_hamiltonian(f);
  const std::size_t i = side == Side::Left ? 0 : 1;
  h[i][i] += f.omegaP;
  return h;
}

Vec2 energy_to_spatial(const EnergyAmplitudes& e, const Frequencies& f,
                       double t) {
  const cplx em = std::polar(1.0, -0.5 * f.omega1 * t);
  const cplx ep = std::polar(1.0, 0.5 * f.omega1 * t);
  const cplx global = std::polar(kInvSqrt2, f.omega0 * t);
  return {(-e.a * em + e.b * ep) * global, (e.a * em + e.b * ep) * global};
}

Mat2 spatial_density_matrix(const EnergyAmplitudes& e, const Frequencies& f,
                            double t) {
  return outer(energy_to_spatial(e, f, t));
}

Mat2 energy_density_matrix(const EnergyAmplitudes& e, const Frequencies& f,
                           double t) {
  const cplx off = e.a * std::conj(e.b) * std::polar(1.0, -f.omega1 * t);
  return {{{cplx{std::norm(e.a), 0.0}, off},
           {std::conj(off), cplx{std::norm(e.b), 0.0}}}};
}

Vec2 evolve_free(const Vec2& psi, const Frequencies& f, double dt) {
  return mat_vec(propagator(free_hamiltonian(f), dt), psi);
}

Vec2 evolve_perturbed(const Vec2& psi, const Frequencies& f, Side side,
                      double dt) {
  return mat_vec(propagator(perturbed_hamiltonian(f, side), dt), psi);
}

}  // namespace wellsim
