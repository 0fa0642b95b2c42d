#include "sqtsim/teleportation.hpp"

#include <cassert>

namespace sqtsim {

namespace {

void require_physical_resource(const TwoModeCovariance& resource) {
  if (!is_physical(resource))
    throw InvalidMatrixError("resource covariance is not physical");
}

}  // namespace

SingleModeGaussian coherent_input(Vec2 mean) {
  return {mean, Mat2::diagonal(Real(0.5), Real(0.5))};
}

ReducedSigma ReducedSigma::from_resource(const TwoModeCovariance& resource) {
  const ModeBlocks blk = blocks(resource);
  ReducedSigma s;
  s.x = blk.a(0, 0) + blk.b(0, 0) - 2 * blk.c(0, 0);
  s.y = blk.a(1, 1) + blk.b(1, 1) + 2 * blk.c(1, 1);
  s.z = blk.a(0, 1) - blk.b(0, 1) + blk.c(0, 1) - blk.c(1, 0);
  return s;
}

Mat2 ReducedSigma::matrix() const {
  Mat2 m;
  m(0, 0) = x;
  m(0, 1) = z;
  m(1, 0) = z;
  m(1, 1) = y;
  return m;
}

SingleModeGaussian output_covariance(const TwoModeCovariance& resource,
                                     Vec2 input_mean) {
  require_physical_resource(resource);
  const ReducedSigma s = ReducedSigma::from_resource(resource);
  SingleModeGaussian out;
  out.mean = input_mean;
  out.cov(0, 0) = s.x + Real(0.5);
  out.cov(0, 1) = s.z;
  out.cov(1, 0) = s.z;
  out.cov(1, 1) = s.y + Real(0.5);
  return out;
}

Real fidelity_general(const SingleModeGaussian& in,
                      const SingleModeGaussian& out) {
  if (!is_physical(in)) throw InvalidMatrixError("input state is not physical");
  if (!is_physical(out))
    throw InvalidMatrixError("output state is not physical");

  const Mat2 sum = in.cov + out.cov;
  const Real delta = sum.det();
  if (!(delta > 0))
    throw std::logic_error("singular covariance sum in fidelity");

  // det(sigma + (i/2) J) = det sigma - 1/4 for real symmetric 2x2 sigma,
  // so the purity factor is real and needs no complex arithmetic. Physical
  // states keep both factors >= 0 up to rounding; clamp the product.
  const Real quarter = Real(0.25);
  const Real theta =
      rmath::max(4 * (in.cov.det() - quarter) * (out.cov.det() - quarter),
                 Real(0));

  const Real dx = out.mean.x - in.mean.x;
  const Real dy = out.mean.y - in.mean.y;
  const Real quad_form =
      (sum(1, 1) * dx * dx - 2 * sum(0, 1) * dx * dy + sum(0, 0) * dy * dy) /
      delta;

  const Real denom = rmath::sqrt(delta + theta) - rmath::sqrt(theta);
  return rmath::exp(-quad_form / 2) / denom;
}

Real fidelity_coherent(const TwoModeCovariance& resource) {
  require_physical_resource(resource);
  const ReducedSigma s = ReducedSigma::from_resource(resource);
  const Real delta = 1 + s.x + s.y + s.x * s.y - s.z * s.z;
  assert(delta >= Real(1) - Real(1e-12));
  return 1 / rmath::sqrt(delta);
}

}  // namespace sqtsim
