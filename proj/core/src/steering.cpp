#include "sqtsim/steering.hpp"

namespace sqtsim {

namespace {

// Values within kSteeringZeroTol of zero collapse to exactly zero so region
// boundaries do not flicker on rounding noise.
Real clamp_measure(Real raw) {
  return raw <= Real(kSteeringZeroTol) ? Real(0) : raw;
}

Mat2 inverse(const Mat2& m, Real det) {
  Mat2 inv;
  inv(0, 0) = m(1, 1) / det;
  inv(0, 1) = -m(0, 1) / det;
  inv(1, 0) = -m(1, 0) / det;
  inv(1, 1) = m(0, 0) / det;
  return inv;
}

}  // namespace

Real steering_schur(const TwoModeCovariance& sigma, SteeringDirection dir) {
  const ModeBlocks blk = blocks(sigma);
  const bool a_to_b = dir == SteeringDirection::AliceToBob;
  const Mat2& steerer = a_to_b ? blk.a : blk.b;
  const Mat2& steered = a_to_b ? blk.b : blk.a;
  const Mat2 cross = a_to_b ? blk.c : blk.c.transposed();

  const Real det_steerer = steerer.det();
  if (det_steerer <= Real(kSingularBlockTol))
    throw DegenerateStateError("steering-party block is singular");

  // conditional covariance of the steered mode after Gaussian measurements
  // on the steering party
  const Mat2 schur =
      steered - cross.transposed() * (inverse(steerer, det_steerer) * cross);
  const Real nu = symplectic_eigenvalue_1mode(schur);
  return clamp_measure(-rmath::log(2 * nu));
}

Real steering_closed_form(const TwoModeCovariance& sigma,
                          SteeringDirection dir) {
  const ModeBlocks blk = blocks(sigma);
  const Real det_sigma = determinant(sigma.matrix());
  if (det_sigma <= 0)
    throw InvalidMatrixError("covariance determinant must be positive");
  const Real det_party =
      (dir == SteeringDirection::AliceToBob ? blk.a : blk.b).det();
  return clamp_measure(rmath::log(det_party / (4 * det_sigma)) / 2);
}

SteeringPair steering_both(const TwoModeCovariance& sigma) {
  SteeringPair pair;
  pair.alice_to_bob = steering_closed_form(sigma, SteeringDirection::AliceToBob);
  pair.bob_to_alice = steering_closed_form(sigma, SteeringDirection::BobToAlice);
  return pair;
}

}  // namespace sqtsim
