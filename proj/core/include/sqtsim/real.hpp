#pragma once

#include <quadmath.h>

namespace sqtsim {

// All covariance algebra runs in IEEE binary128. Double precision cannot
// hold a near-pure two-mode squeezed state at r ~ 5: the matrix entries grow
// like cosh(2r) while the purity information lives in the last bits of
// cosh^2(2r) - sinh^2(2r).
using Real = __float128;

namespace rmath {

inline Real sqrt(Real v) { return ::sqrtq(v); }
inline Real exp(Real v) { return ::expq(v); }
inline Real log(Real v) { return ::logq(v); }
inline Real cosh(Real v) { return ::coshq(v); }
inline Real sinh(Real v) { return ::sinhq(v); }
inline Real abs(Real v) { return ::fabsq(v); }
inline Real max(Real a, Real b) { return a > b ? a : b; }
inline Real min(Real a, Real b) { return a < b ? a : b; }

}  // namespace rmath

inline double to_double(Real v) { return static_cast<double>(v); }

}  // namespace sqtsim
