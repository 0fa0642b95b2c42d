#include "sqtsim/bath.hpp"

namespace sqtsim {

Real thermal_occupation(Real temperature) {
  if (temperature < 0) throw DomainError("temperature must be nonnegative");
  if (temperature == 0) return 0;
  // e^{-1/T} / (1 - e^{-1/T}): overflow-free form of 1/(e^{1/T} - 1)
  const Real w = rmath::exp(Real(-1) / temperature);
  return w / (1 - w);
}

BathMoments bath_moments(Real n_th, Real reservoir_squeezing) {
  const Real ch = rmath::cosh(reservoir_squeezing);
  const Real sh = rmath::sinh(reservoir_squeezing);
  BathMoments m;
  m.mean_occupation = n_th * (ch * ch + sh * sh) + sh * sh;
  m.squeeze_correlation = -(2 * n_th + 1) * ch * sh;
  return m;
}

TwoModeCovariance asymptotic_covariance(Real mean_occupation,
                                        Real squeeze_correlation) {
  const Real n = mean_occupation;
  const Real m = squeeze_correlation;
  if (m * m > n * (n + 1) + Real(kHeisenbergTol))
    throw UnphysicalBathError("bath moments violate |M|^2 <= N(N+1)");

  const Real d = n + Real(0.5);
  Mat4 out;
  for (int i = 0; i < 4; ++i) out(i, i) = d;
  out(0, 2) = m;
  out(2, 0) = m;
  out(1, 3) = -m;
  out(3, 1) = -m;
  return TwoModeCovariance::from_matrix(out);
}

BathParams::BathParams(Real temperature, Real reservoir_squeezing,
                       Real decay_rate)
    : temperature_(temperature),
      reservoir_squeezing_(reservoir_squeezing),
      decay_rate_(decay_rate) {
  if (temperature_ < 0) throw DomainError("temperature must be nonnegative");
  if (reservoir_squeezing_ < 0)
    throw DomainError("reservoir squeezing must be nonnegative");
  if (!(decay_rate_ > 0)) throw DomainError("decay rate must be positive");
  n_th_ = sqtsim::thermal_occupation(temperature_);
  moments_ = bath_moments(n_th_, reservoir_squeezing_);
}

TwoModeCovariance BathParams::asymptotic() const {
  return asymptotic_covariance(moments_.mean_occupation,
                               moments_.squeeze_correlation);
}

}  // namespace sqtsim
