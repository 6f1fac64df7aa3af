#pragma once

#include "lvp/exponent.hpp"

namespace lvp {

/// Absolute accuracy target for the angular integral.
inline constexpr double kTolJ = 1e-9;
/// Finite q above this value is evaluated as q = inf.
inline constexpr double kJLargeQ = 1e6;

struct JValue {
  double value = 0.0;
  /// True when a large finite q was short-circuited to the q = inf value.
  bool shortCircuited = false;
};

/// q with 1/p + 1/q = 1.
Exponent conjugate(const Exponent& p);

/// int_0^{2 pi} (|cos t|^{2q} + |sin t|^{2q})^{-1/q} dt; exactly 8 at q = inf.
JValue angularIntegral(const Exponent& q);

/// Convenience: angularIntegral(q).value.
double J(const Exponent& q);

/// J(q) / 2^(2 - 1/q).
double F(const Exponent& q);

/// F(conjugate(p)); increases from 2 at p = 1 to pi at p = inf.
double scriptF(const Exponent& p);

}  // namespace lvp
