#pragma once

// A single double-well molecule as a two-level system in the spatial basis
// {|L>,|R>}. The tunnelling coupling omega1 splits the energy doublet and
// drives Rabi beating of the well populations; an environmental impact raises
// one well by omegaP for its duration.
//
// Conventions used throughout the project:
//  - propagators are exp(+i H t);
//  - density matrices are rho_ij = c_i conj(c_j);
//  - in the spatial expansion the antisymmetric energy amplitude enters the
//    left-well coefficient with a minus sign (see energy_to_spatial).

#include "wellsim/smallmat.hpp"

namespace wellsim {

struct Frequencies {
  double omega0 = 0.0;  // well ground frequency; contributes global phase only
  double omega1 = 0.0;  // tunnelling splitting
  double omegaP = 0.0;  // impact perturbation strength
};

enum class Side { Left, Right };

inline Side other_side(Side s) {
  return s == Side::Left ? Side::Right : Side::Left;
}

// Amplitudes (a, b) on the energy doublet, |a|^2 + |b|^2 = 1.
struct EnergyAmplitudes {
  cplx a;
  cplx b;
};

/// [[w0, w1/2],[w1/2, w0]] in the {|L>,|R>} basis.
Mat2 free_hamiltonian(const Frequencies& f);

/// Free Hamiltonian with omegaP added to the diagonal entry of `side`.
Mat2 perturbed_hamiltonian(const Frequencies& f, Side side);

/// Spatial amplitudes (alpha, beta) of the state a|0> + b|1> at time t:
///   alpha(t) = (-a e^{-i w1 t/2} + b e^{+i w1 t/2}) e^{i w0 t} / sqrt(2)
///   beta(t)  = (+a e^{-i w1 t/2} + b e^{+i w1 t/2}) e^{i w0 t} / sqrt(2)
/// This equals exp(+i H_free t) applied to the t=0 amplitudes.
Vec2 energy_to_spatial(const EnergyAmplitudes& e, const Frequencies& f,
                       double t);

/// outer(energy_to_spatial(...)): for real a, b the diagonal is
/// 1/2 -+ ab cos(w1 t) and Re(rho_LR) = (b^2 - a^2)/2.
Mat2 spatial_density_matrix(const EnergyAmplitudes& e, const Frequencies& f,
                            double t);

/// Density matrix on the energy doublet: diag(|a|^2, |b|^2) with
/// off-diagonal a conj(b) e^{-i w1 t}.
Mat2 energy_density_matrix(const EnergyAmplitudes& e, const Frequencies& f,
                           double t);

Vec2 evolve_free(const Vec2& psi, const Frequencies& f, double dt);
Vec2 evolve_perturbed(const Vec2& psi, const Frequencies& f, Side side,
                      double dt);

}  // namespace wellsim
