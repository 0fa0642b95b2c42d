#include "sqtsim/gaussian.hpp"

namespace sqtsim {

Mat2 Mat2::diagonal(Real d0, Real d1) {
  Mat2 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  return m;
}

Mat2 Mat2::transposed() const {
  Mat2 t;
  t(0, 0) = (*this)(0, 0);
  t(0, 1) = (*this)(1, 0);
  t(1, 0) = (*this)(0, 1);
  t(1, 1) = (*this)(1, 1);
  return t;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2 operator*(Real s, const Mat2& a) {
  Mat2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = s * a.e[k];
  return r;
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  return m;
}

Real Mat4::max_abs() const {
  Real m = 0;
  for (const Real& v : e) m = rmath::max(m, rmath::abs(v));
  return m;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Real s = 0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat4 operator*(Real s, const Mat4& a) {
  Mat4 r;
  for (int k = 0; k < 16; ++k) r.e[k] = s * a.e[k];
  return r;
}

Real determinant(const Mat4& m) {
  Mat4 a = m;
  Real det = 1;
  for (int c = 0; c < 4; ++c) {
    int pivot = c;
    for (int r = c + 1; r < 4; ++r)
      if (rmath::abs(a(r, c)) > rmath::abs(a(pivot, c))) pivot = r;
    if (a(pivot, c) == Real(0)) return 0;
    if (pivot != c) {
      for (int j = 0; j < 4; ++j) std::swap(a(c, j), a(pivot, j));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < 4; ++r) {
      const Real f = a(r, c) / a(c, c);
      for (int j = c; j < 4; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Mat2 symplectic_form_2() {
  Mat2 j;
  j(0, 1) = 1;
  j(1, 0) = -1;
  return j;
}

Mat4 symplectic_form_4() {
  Mat4 omega;
  omega(0, 1) = 1;
  omega(1, 0) = -1;
  omega(2, 3) = 1;
  omega(3, 2) = -1;
  return omega;
}

TwoModeCovariance TwoModeCovariance::from_matrix(const Mat4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (rmath::abs(m(i, j) - m(j, i)) > Real(kSymmetryTol))
        throw InvalidMatrixError("covariance matrix is not symmetric");
  Mat4 s = m;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Real avg = (m(i, j) + m(j, i)) / 2;
      s(i, j) = avg;
      s(j, i) = avg;
    }
  return TwoModeCovariance(s);
}

ModeBlocks blocks(const TwoModeCovariance& sigma) {
  ModeBlocks blk;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      blk.a(i, j) = sigma(i, j);
      blk.b(i, j) = sigma(i + 2, j + 2);
      blk.c(i, j) = sigma(i, j + 2);
    }
  return blk;
}

TwoModeCovariance assemble(const ModeBlocks& parts) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = parts.a(i, j);
      m(i + 2, j + 2) = parts.b(i, j);
      m(i, j + 2) = parts.c(i, j);
      m(j + 2, i) = parts.c(i, j);
    }
  return TwoModeCovariance::from_matrix(m);
}

std::pair<Real, Real> symplectic_eigenvalues(const TwoModeCovariance& sigma) {
  const ModeBlocks blk = blocks(sigma);
  // sum of the principal 2x2 minor invariants: det A + det B + 2 det C
  const Real delta = blk.a.det() + blk.b.det() + 2 * blk.c.det();
  const Real disc = delta * delta - 4 * determinant(sigma.matrix());
  if (disc < Real(-kDiscriminantTol))
    throw InvalidMatrixError("no real symplectic spectrum (negative discriminant)");
  const Real root = rmath::sqrt(rmath::max(disc, Real(0)));
  Real lo = (delta - root) / 2;
  const Real hi = (delta + root) / 2;
  if (lo < Real(-kDiscriminantTol))
    throw InvalidMatrixError("no real symplectic spectrum (negative invariant)");
  lo = rmath::max(lo, Real(0));
  return {rmath::sqrt(lo), rmath::sqrt(rmath::max(hi, Real(0)))};
}

Real symplectic_eigenvalue_1mode(const Mat2& m) {
  const Real d = m.det();
  if (d < Real(-kDiscriminantTol))
    throw InvalidMatrixError("negative determinant for one-mode covariance");
  return rmath::sqrt(rmath::max(d, Real(0)));
}

bool is_physical(const TwoModeCovariance& sigma) {
  return symplectic_eigenvalues(sigma).first >= Real(0.5) - Real(kPhysicalityTol);
}

bool is_physical(const SingleModeGaussian& state) {
  const Real d = state.cov.det();
  if (d < 0) return false;
  return rmath::sqrt(d) >= Real(0.5) - Real(kPhysicalityTol);
}

}  // namespace sqtsim
