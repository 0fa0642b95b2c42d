#pragma once

#include "sqtsim/bath.hpp"
#include "sqtsim/gaussian.hpp"

namespace sqtsim {

/// Two-mode squeezed vacuum covariance at squeezing r >= 0.
/// Throws DomainError for r < 0.
TwoModeCovariance initial_tmsv(Real squeezing);

/// sigma(t) = e^{-gamma t} sigma(0) + (1 - e^{-gamma t}) sigma(inf).
/// Exact at t = 0; throws DomainError for t < 0.
TwoModeCovariance evolve(const TwoModeCovariance& initial,
                         const TwoModeCovariance& asymptotic, Real decay_rate,
                         Real t);

/// A resource state decaying in a common squeezed thermal environment:
/// initial squeezing plus bath, with sigma(0) and sigma(inf) precomputed.
class EvolutionScenario {
 public:
  EvolutionScenario(Real squeezing, BathParams bath);

  Real squeezing() const { return squeezing_; }
  const BathParams& bath() const { return bath_; }
  const TwoModeCovariance& initial() const { return initial_; }
  const TwoModeCovariance& asymptotic() const { return asymptotic_; }

  TwoModeCovariance covariance_at(Real t) const;

 private:
  Real squeezing_;
  BathParams bath_;
  TwoModeCovariance initial_;
  TwoModeCovariance asymptotic_;
};

}  // namespace sqtsim
