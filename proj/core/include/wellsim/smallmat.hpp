#pragma once

// Dense complex linear algebra for two- and four-dimensional state spaces:
// closed-form Hermitian eigendecomposition, unitary propagators, Kronecker
// products, outer products, partial traces. Everything is value-semantic and
// fixed-size; nothing here is meant to scale past dimension four.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace wellsim {

using cplx = std::complex<double>;

template <std::size_t N>
using Vec = std::array<cplx, N>;
template <std::size_t N>
using Mat = std::array<std::array<cplx, N>, N>;

using Vec2 = Vec<2>;
using Vec4 = Vec<4>;
using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

// Tolerances used by the validating entry points.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitNormTol = 1e-9;
inline constexpr double kDegenerateNormTol = 1e-12;

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state that must be normalisable has numerically zero norm, e.g. perfect
// destructive interference between collision histories. Carries the
// pre-normalisation norm as a diagnostic.
class DegenerateBranchError : public std::runtime_error {
 public:
  DegenerateBranchError(const std::string& what, double pre_norm)
      : std::runtime_error(what), pre_norm_(pre_norm) {}
  double pre_normalisation_norm() const { return pre_norm_; }

 private:
  double pre_norm_;
};

struct EigenSystem {
  std::array<double, 2> eigenvalues;  // ascending
  Mat2 eigenvectors;                  // orthonormal columns, phase-fixed
};

template <std::size_t N>
Mat<N> identity() {
  Mat<N> m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = cplx{1.0, 0.0};
  return m;
}

template <std::size_t N>
Vec<N> mat_vec(const Mat<N>& m, const Vec<N>& v) {
  Vec<N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < N; ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

template <std::size_t N>
Mat<N> matmul(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const cplx aik = a[i][k];
      for (std::size_t j = 0; j < N; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

template <std::size_t N>
Mat<N> dagger(const Mat<N>& m) {
  Mat<N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i][j] = std::conj(m[j][i]);
  return out;
}

template <std::size_t N>
cplx trace(const Mat<N>& m) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < N; ++i) acc += m[i][i];
  return acc;
}

template <std::size_t N>
double norm_squared(const Vec<N>& v) {
  double acc = 0.0;
  for (const cplx& c : v) acc += std::norm(c);
  return acc;
}

template <std::size_t N>
double norm(const Vec<N>& v) {
  return std::sqrt(norm_squared(v));
}

template <std::size_t N>
struct Normalised {
  Vec<N> state;
  double norm;  // pre-normalisation norm
};

/// Scales v to unit norm and reports the original norm. Norms below
/// kDegenerateNormTol are treated as zero and raise DegenerateBranchError.
template <std::size_t N>
Normalised<N> normalise(const Vec<N>& v) {
  const double n = norm(v);
  if (n < kDegenerateNormTol)
    throw DegenerateBranchError("cannot normalise state with norm " +
                                    std::to_string(n),
                                n);
  Vec<N> out = v;
  for (cplx& c : out) c /= n;
  return {out, n};
}

template <std::size_t N>
bool is_hermitian(const Mat<N>& m, double tol = kHermitianTol) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      if (std::abs(m[i][j] - std::conj(m[j][i])) > tol) return false;
  return true;
}

/// Density matrix of a pure state: rho_ij = v_i * conj(v_j).
/// The input must be normalised to within kUnitNormTol.
template <std::size_t N>
Mat<N> outer(const Vec<N>& v) {
  const double n = norm(v);
  if (std::abs(n - 1.0) > kUnitNormTol)
    throw ValidationError("outer: state norm " + std::to_string(n) +
                          " deviates from 1 beyond tolerance");
  Mat<N> rho{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) rho[i][j] = v[i] * std::conj(v[j]);
  return rho;
}

/// Closed-form eigendecomposition of a Hermitian 2x2 matrix. Eigenvalues
/// ascending; each eigenvector's first nonzero component is made real
/// positive so results are bit-deterministic.
EigenSystem eig2(const Mat2& h);

/// U = exp(+i h t) via eig2; t may be negative.
Mat2 propagator(const Mat2& h, double t);

/// Kronecker product in row-major {|00>,|01>,|10>,|11>} ordering
/// (first-factor index major).
Mat4 kron(const Mat2& a, const Mat2& b);
Vec4 kron_vec(const Vec2& a, const Vec2& b);

/// Partial trace over the second / first tensor factor of a 4x4 operator.
Mat2 trace_out_second(const Mat4& rho);
Mat2 trace_out_first(const Mat4& rho);

}  // namespace wellsim
