#pragma once

#include "sqtsim/gaussian.hpp"

namespace sqtsim {

inline constexpr double kSteeringZeroTol = 1e-14;   // snap-to-zero window
inline constexpr double kSingularBlockTol = 1e-14;  // Schur pivot guard

enum class SteeringDirection { AliceToBob, BobToAlice };

/// Steering measure via the symplectic eigenvalue of the Schur complement of
/// the steering party's block: max{0, -ln(2 nu)}. Throws DegenerateStateError
/// if that block is singular (cannot happen for physical states).
Real steering_schur(const TwoModeCovariance& sigma, SteeringDirection dir);

/// Closed form max{0, (1/2) ln(det A / (4 det sigma))} (det B for B->A).
/// Throws InvalidMatrixError for det sigma <= 0. Production path; the Schur
/// route exists as an independent cross-check.
Real steering_closed_form(const TwoModeCovariance& sigma,
                          SteeringDirection dir);

struct SteeringPair {
  Real alice_to_bob{0};
  Real bob_to_alice{0};
};

/// Both directions via the closed form.
SteeringPair steering_both(const TwoModeCovariance& sigma);

}  // namespace sqtsim
