#pragma once

#include "sqtsim/gaussian.hpp"

namespace sqtsim {

/// Coherent state: vacuum covariance (1/2) I, arbitrary mean.
SingleModeGaussian coherent_input(Vec2 mean = {});

/// The 2x2 excess-noise matrix Sigma = [[X, Z], [Z, Y]] added to the input
/// covariance by unit-gain teleportation over a shared two-mode resource.
struct ReducedSigma {
  Real x{0};
  Real y{0};
  Real z{0};

  static ReducedSigma from_resource(const TwoModeCovariance& resource);
  Mat2 matrix() const;
};

/// Teleported output state: covariance sigma_in + Sigma with the mean carried
/// over unchanged from the input. Throws for an unphysical resource.
SingleModeGaussian output_covariance(const TwoModeCovariance& resource,
                                     Vec2 input_mean = {});

/// One-mode Gaussian fidelity between arbitrary physical states.
Real fidelity_general(const SingleModeGaussian& in,
                      const SingleModeGaussian& out);

/// Coherent-input teleportation fidelity 1/sqrt(1 + X + Y + XY - Z^2).
/// Agrees with fidelity_general on the coherent input when means are equal.
Real fidelity_coherent(const TwoModeCovariance& resource);

}  // namespace sqtsim
