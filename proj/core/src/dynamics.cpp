#include "sqtsim/dynamics.hpp"

namespace sqtsim {

TwoModeCovariance initial_tmsv(Real squeezing) {
  if (squeezing < 0) throw DomainError("initial squeezing must be nonnegative");
  const Real ch = rmath::cosh(2 * squeezing) / 2;
  const Real sh = rmath::sinh(2 * squeezing) / 2;
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = ch;
  m(0, 2) = sh;
  m(2, 0) = sh;
  m(1, 3) = -sh;
  m(3, 1) = -sh;
  return TwoModeCovariance::from_matrix(m);
}

TwoModeCovariance evolve(const TwoModeCovariance& initial,
                         const TwoModeCovariance& asymptotic, Real decay_rate,
                         Real t) {
  if (t < 0) throw DomainError("time must be nonnegative");
  const Real w = rmath::exp(-decay_rate * t);
  Mat4 out;
  for (int k = 0; k < 16; ++k)
    out.e[k] = w * initial.matrix().e[k] + (1 - w) * asymptotic.matrix().e[k];
  return TwoModeCovariance::from_matrix(out);
}

EvolutionScenario::EvolutionScenario(Real squeezing, BathParams bath)
    : squeezing_(squeezing),
      bath_(bath),
      initial_(initial_tmsv(squeezing)),
      asymptotic_(bath_.asymptotic()) {}

TwoModeCovariance EvolutionScenario::covariance_at(Real t) const {
  return evolve(initial_, asymptotic_, bath_.decay_rate(), t);
}

}  // namespace sqtsim
