#pragma once

#include <array>
#include <utility>

#include "sqtsim/errors.hpp"
#include "sqtsim/real.hpp"

namespace sqtsim {

// Quadrature ordering throughout is (x_A, p_A, x_B, p_B), with hbar = 1 and
// vacuum variance 1/2.

struct Vec2 {
  Real x{0};
  Real y{0};
};

/// Row-major 2x2 real matrix.
struct Mat2 {
  std::array<Real, 4> e{};

  Real& operator()(int i, int j) { return e[2 * i + j]; }
  const Real& operator()(int i, int j) const { return e[2 * i + j]; }

  static Mat2 identity() { return diagonal(1, 1); }
  static Mat2 diagonal(Real d0, Real d1);

  Mat2 transposed() const;
  Real trace() const { return e[0] + e[3]; }
  Real det() const { return e[0] * e[3] - e[1] * e[2]; }
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Real s, const Mat2& a);

/// Row-major 4x4 real matrix.
struct Mat4 {
  std::array<Real, 16> e{};

  Real& operator()(int i, int j) { return e[4 * i + j]; }
  const Real& operator()(int i, int j) const { return e[4 * i + j]; }

  static Mat4 identity();
  Real max_abs() const;
};

Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator*(Real s, const Mat4& a);

/// Determinant by LU with partial pivoting. Elimination keeps the heavy
/// cancellations of near-pure covariances at pivot scale, which cofactor
/// expansion does not.
Real determinant(const Mat4& m);

/// J = [[0, 1], [-1, 0]].
Mat2 symplectic_form_2();

/// Omega = J (+) J for the (x_A, p_A, x_B, p_B) ordering.
Mat4 symplectic_form_4();

inline constexpr double kSymmetryTol = 1e-12;       // absolute, per entry
inline constexpr double kPhysicalityTol = 1e-10;    // slack below nu = 1/2
inline constexpr double kDiscriminantTol = 1e-12;   // negative-clamp window

/// 4x4 real symmetric covariance matrix of a two-mode Gaussian state.
class TwoModeCovariance {
 public:
  /// Validates symmetry to kSymmetryTol (absolute) and stores the
  /// symmetrized matrix, so block decomposition round-trips exactly.
  /// Throws InvalidMatrixError on asymmetry beyond tolerance.
  static TwoModeCovariance from_matrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  Real operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit TwoModeCovariance(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

/// The 2x2 blocks of sigma = [[A, C], [C^T, B]].
struct ModeBlocks {
  Mat2 a;  // mode A
  Mat2 b;  // mode B
  Mat2 c;  // intermode correlations
};

/// Mean vector and 2x2 covariance of a one-mode Gaussian state.
struct SingleModeGaussian {
  Vec2 mean{};
  Mat2 cov = Mat2::diagonal(Real(0.5), Real(0.5));
};

ModeBlocks blocks(const TwoModeCovariance& sigma);

/// Inverse of blocks(); exact reassembly of the stored matrix.
TwoModeCovariance assemble(const ModeBlocks& parts);

/// Two-mode symplectic spectrum (nu_minus, nu_plus), nu_minus <= nu_plus.
/// Throws InvalidMatrixError if the spectrum is not real beyond the
/// kDiscriminantTol clamp window.
std::pair<Real, Real> symplectic_eigenvalues(const TwoModeCovariance& sigma);

/// sqrt(det m) for a symmetric 2x2 matrix; throws InvalidMatrixError for
/// det < -kDiscriminantTol, clamps smaller negatives to zero.
Real symplectic_eigenvalue_1mode(const Mat2& m);

/// Bona fide condition nu_minus >= 1/2 - kPhysicalityTol.
bool is_physical(const TwoModeCovariance& sigma);

/// One-mode version: sqrt(det cov) >= 1/2 - kPhysicalityTol.
bool is_physical(const SingleModeGaussian& state);

}  // namespace sqtsim
