#pragma once

#include "sqtsim/gaussian.hpp"

namespace sqtsim {

inline constexpr double kHeisenbergTol = 1e-9;  // slack on |M|^2 <= N(N+1)

/// Bose-Einstein mean occupation at unit frequency; 0 at T = 0.
/// Temperature in units of hbar*omega/k_B. Throws DomainError for T < 0.
Real thermal_occupation(Real temperature);

/// Second moments (N, M) of the squeezed thermal reservoir.
struct BathMoments {
  Real mean_occupation{0};       // N
  Real squeeze_correlation{0};   // M, real and <= 0 for n_th, R >= 0
};

/// N = n_th (cosh^2 R + sinh^2 R) + sinh^2 R,
/// M = -(2 n_th + 1) cosh R sinh R.
/// Total on n_th >= 0, R >= 0; the result always satisfies
/// N(N+1) - M^2 = n_th (n_th + 1) >= 0.
BathMoments bath_moments(Real n_th, Real reservoir_squeezing);

/// Steady-state covariance [[ (N+1/2) I, M sigma_z ], [ M sigma_z, (N+1/2) I ]].
/// Throws UnphysicalBathError when |M|^2 > N(N+1) + kHeisenbergTol.
TwoModeCovariance asymptotic_covariance(Real mean_occupation,
                                        Real squeeze_correlation);

/// Squeezed thermal environment: temperature T, reservoir squeezing R,
/// decay rate gamma, with the derived occupation and moments cached.
class BathParams {
 public:
  BathParams(Real temperature, Real reservoir_squeezing, Real decay_rate);

  Real temperature() const { return temperature_; }
  Real reservoir_squeezing() const { return reservoir_squeezing_; }
  Real decay_rate() const { return decay_rate_; }

  Real thermal_occupation() const { return n_th_; }
  const BathMoments& moments() const { return moments_; }

  TwoModeCovariance asymptotic() const;

 private:
  Real temperature_;
  Real reservoir_squeezing_;
  Real decay_rate_;
  Real n_th_;
  BathMoments moments_;
};

}  // namespace sqtsim
