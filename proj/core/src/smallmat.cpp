#include "wellsim/smallmat.hpp"

namespace wellsim {

namespace {

// Rotate the phase so the first component with nonzero magnitude is real
// positive, then scale to unit norm.
Vec2 fix_phase_and_normalise(Vec2 v) {
  for (const cplx& c : v) {
    const double mag = std::abs(c);
    if (mag > 0.0) {
      const cplx phase = std::conj(c) / mag;
      v[0] *= phase;
      v[1] *= phase;
      break;
    }
  }
  const double n = norm(v);
  v[0] /= n;
  v[1] /= n;
  return v;
}

}  // namespace

EigenSystem eig2(const Mat2& h) {
  if (!is_hermitian(h))
    throw ValidationError("eig2: matrix is not Hermitian within tolerance");

  const double a = h[0][0].real();
  const double d = h[1][1].real();
  const cplx b = h[0][1];

  if (b == cplx{0.0, 0.0}) {
    // Diagonal, possibly degenerate: standard basis columns, ascending order.
    EigenSystem es;
    if (a <= d) {
      es.eigenvalues = {a, d};
      es.eigenvectors = {{{cplx{1.0, 0.0}, cplx{0.0, 0.0}},
                          {cplx{0.0, 0.0}, cplx{1.0, 0.0}}}};
    } else {
      es.eigenvalues = {d, a};
      es.eigenvectors = {{{cplx{0.0, 0.0}, cplx{1.0, 0.0}},
                          {cplx{1.0, 0.0}, cplx{0.0, 0.0}}}};
    }
    return es;
  }

  const double mean = 0.5 * (a + d);
  const double delta = 0.5 * (a - d);
  const double r = std::hypot(delta, std::abs(b));

  // Pick the component construction without cancellation; the two choices
  // below are exactly orthogonal by construction.
  Vec2 lo, hi;
  if (delta >= 0.0) {
    hi = {cplx{delta + r, 0.0}, std::conj(b)};
    lo = {b, cplx{-(delta + r), 0.0}};
  } else {
    hi = {b, cplx{r - delta, 0.0}};
    lo = {cplx{delta - r, 0.0}, std::conj(b)};
  }
  lo = fix_phase_and_normalise(lo);
  hi = fix_phase_and_normalise(hi);

  EigenSystem es;
  es.eigenvalues = {mean - r, mean + r};
  es.eigenvectors = {{{lo[0], hi[0]}, {lo[1], hi[1]}}};
  return es;
}

Mat2 propagator(const Mat2& h, double t) {
  if (t == 0.0) {
    if (!is_hermitian(h))
      throw ValidationError("propagator: matrix is not Hermitian");
    return identity<2>();
  }
  const EigenSystem es = eig2(h);
  const cplx p0 = std::polar(1.0, es.eigenvalues[0] * t);
  const cplx p1 = std::polar(1.0, es.eigenvalues[1] * t);
  const Mat2& v = es.eigenvectors;
  Mat2 u{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      u[i][j] = v[i][0] * p0 * std::conj(v[j][0]) +
                v[i][1] * p1 * std::conj(v[j][1]);
  return u;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ja = 0; ja < 2; ++ja)
      for (std::size_t ib = 0; ib < 2; ++ib)
        for (std::size_t jb = 0; jb < 2; ++jb)
          out[2 * ia + ib][2 * ja + jb] = a[ia][ja] * b[ib][jb];
  return out;
}

Vec4 kron_vec(const Vec2& a, const Vec2& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Mat2 trace_out_second(const Mat4& rho) {
  Mat2 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out[i][j] = rho[2 * i][2 * j] + rho[2 * i + 1][2 * j + 1];
  return out;
}

Mat2 trace_out_first(const Mat4& rho) {
  Mat2 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out[i][j] = rho[i][j] + rho[2 + i][2 + j];
  return out;
}

}  // namespace wellsim
