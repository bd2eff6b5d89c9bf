#include "wellsim/histories.hpp"

#include <algorithm>
#include <cmath>

namespace wellsim {

namespace {

// Perturbed for dt, then free for the rest of the window. A zero-length
// tail is skipped so the degenerate-duration case composes exactly.
Mat2 branch_factor(const Frequencies& f, Side side, double dt, double window) {
  const Mat2 perturbed = propagator(perturbed_hamiltonian(f, side), dt);
  if (window == dt) return perturbed;
  return matmul(propagator(free_hamiltonian(f), window - dt), perturbed);
}

std::string weight_diagnostic(double w1, double w2, double t1, double t2) {
  return "degenerate branch superposition (weights " + std::to_string(w1) +
         ", " + std::to_string(w2) + "; durations " + std::to_string(t1) +
         ", " + std::to_string(t2) + ")";
}

}  // namespace

CollisionResult<2> collision_map_single(const Vec2& psi, const Frequencies& f,
                                        const BranchSpec& spec) {
  if (std::abs(norm_squared(psi) - 1.0) > 1e-6)
    throw ValidationError("collision_map_single: state is not normalised");
  const double window = std::max(spec.t1, spec.t2);
  if (spec.t1 == spec.t2) {
    // Degenerate durations: a plain unitary collision.
    return {mat_vec(branch_factor(f, spec.side, spec.t1, window), psi), 1.0};
  }

  const Mat2 u_occ = branch_factor(f, spec.side, spec.t1, window);
  const Mat2 u_unocc = branch_factor(f, spec.side, spec.t2, window);

  const std::size_t occ_idx = spec.side == Side::Left ? 0 : 1;
  const cplx amp_occ = psi[occ_idx];
  const cplx amp_unocc = psi[1 - occ_idx];

  Vec2 branch_occ, branch_unocc;
  cplx w_occ{}, w_unocc{};
  switch (spec.mode) {
    case WeightMode::Amplitude: {
      branch_occ = mat_vec(u_occ, psi);
      branch_unocc = mat_vec(u_unocc, psi);
      const double s =
          std::sqrt(std::norm(amp_occ) + std::norm(amp_unocc));
      w_occ = amp_occ / s;
      w_unocc = amp_unocc / s;
      break;
    }
    case WeightMode::Probability: {
      branch_occ = mat_vec(u_occ, psi);
      branch_unocc = mat_vec(u_unocc, psi);
      const double p_occ = std::norm(amp_occ);
      const double p_unocc = std::norm(amp_unocc);
      const double s = p_occ + p_unocc;
      w_occ = p_occ / s;
      w_unocc = p_unocc / s;
      break;
    }
    case WeightMode::ProjectedBranch: {
      Vec2 proj_occ{}, proj_unocc{};
      proj_occ[occ_idx] = psi[occ_idx];
      proj_unocc[1 - occ_idx] = psi[1 - occ_idx];
      branch_occ = mat_vec(u_occ, proj_occ);
      branch_unocc = mat_vec(u_unocc, proj_unocc);
      w_occ = w_unocc = cplx{1.0, 0.0};
      break;
    }
  }

  Vec2 out;
  for (std::size_t i = 0; i < 2; ++i)
    out[i] = w_occ * branch_occ[i] + w_unocc * branch_unocc[i];

  const double n = norm(out);
  if (n < kDegenerateNormTol)
    throw DegenerateBranchError(
        weight_diagnostic(std::abs(w_occ), std::abs(w_unocc), spec.t1,
                          spec.t2),
        n);
  for (cplx& c : out) c /= n;
  return {out, n};
}

CollisionResult<4> collision_map_pair(const Vec4& psi, const Frequencies& f_a,
                                      const Frequencies& f_b,
                                      const PairCollisionEvent& event) {
  if (std::abs(norm_squared(psi) - 1.0) > 1e-6)
    throw ValidationError("collision_map_pair: state is not normalised");
  const double window = std::max(event.t1, event.t2);

  const auto history = [&](double dt) {
    Mat2 ua, ub;
    if (event.perturb_both || event.branch_source == MoleculeId::A)
      ua = branch_factor(f_a, event.side_a, dt, window);
    else
      ua = propagator(free_hamiltonian(f_a), window);
    if (event.perturb_both || event.branch_source == MoleculeId::B)
      ub = branch_factor(f_b, event.side_b, dt, window);
    else
      ub = propagator(free_hamiltonian(f_b), window);
    return kron(ua, ub);
  };

  if (event.t1 == event.t2) return {mat_vec(history(event.t1), psi), 1.0};

  const Mat4 u_occ = history(event.t1);
  const Mat4 u_unocc = history(event.t2);

  // Occupation of the branch-source molecule's perturbed side in the joint
  // state. Basis index i = 2*i_A + i_B with Left = 0.
  const Side src_side =
      event.branch_source == MoleculeId::A ? event.side_a : event.side_b;
  const std::size_t src_bit = event.branch_source == MoleculeId::A ? 1 : 0;
  const std::size_t want = src_side == Side::Left ? 0 : 1;
  double p_occ = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    if (((i >> src_bit) & 1u) == want) p_occ += std::norm(psi[i]);
  const double p_unocc = std::max(0.0, 1.0 - p_occ);

  Vec4 branch_occ, branch_unocc;
  double w_occ = 0.0, w_unocc = 0.0;
  switch (event.mode) {
    case WeightMode::Amplitude: {
      branch_occ = mat_vec(u_occ, psi);
      branch_unocc = mat_vec(u_unocc, psi);
      const double s = std::sqrt(p_occ + p_unocc);
      w_occ = std::sqrt(p_occ) / s;
      w_unocc = std::sqrt(p_unocc) / s;
      break;
    }
    case WeightMode::Probability: {
      branch_occ = mat_vec(u_occ, psi);
      branch_unocc = mat_vec(u_unocc, psi);
      const double s = p_occ + p_unocc;
      w_occ = p_occ / s;
      w_unocc = p_unocc / s;
      break;
    }
    case WeightMode::ProjectedBranch: {
      Vec4 proj_occ{}, proj_unocc{};
      for (std::size_t i = 0; i < 4; ++i) {
        if (((i >> src_bit) & 1u) == want)
          proj_occ[i] = psi[i];
        else
          proj_unocc[i] = psi[i];
      }
      branch_occ = mat_vec(u_occ, proj_occ);
      branch_unocc = mat_vec(u_unocc, proj_unocc);
      w_occ = w_unocc = 1.0;
      break;
    }
  }

  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = w_occ * branch_occ[i] + w_unocc * branch_unocc[i];

  const double n = norm(out);
  if (n < kDegenerateNormTol)
    throw DegenerateBranchError(
        weight_diagnostic(w_occ, w_unocc, event.t1, event.t2), n);
  for (cplx& c : out) c /= n;
  return {out, n};
}

}  // namespace wellsim
