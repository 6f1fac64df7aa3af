#pragma once

// Dormand-Prince 5(4) integrator with adaptive steps (local extrapolation,
// FSAL). Header-only so the state dimension stays a compile-time constant.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lvp/errors.hpp"
#include "lvp/exponent.hpp"

namespace lvp {

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  /// Initial step; 0 picks (t1 - t0) / 100.
  double initialStep = 0.0;
  /// Steps below minStepFactor * timeScale raise StepFailure.
  double minStepFactor = 1e-14;
  std::size_t maxSteps = 2'000'000;
};

template <std::size_t N>
using OdeState = std::array<double, N>;

/// Integrates y' = field(t, y) from t0 to t1 > t0. `timeScale` is the
/// natural time unit (the period) used for the step-underflow guard. When
/// `observer` is non-null it is called as observer(t, y) after every
/// accepted step, including the initial state.
template <std::size_t N, typename Field, typename Observer>
OdeState<N> dormandPrince(Field&& field, OdeState<N> y, double t0, double t1,
                          const OdeOptions& opts, double timeScale,
                          Observer* observer) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  if (!(t1 > t0)) throw InvalidArgument("integration needs t1 > t0");
  if (observer) (*observer)(t0, y);
  const double span = t1 - t0;
  double h = opts.initialStep > 0.0 ? opts.initialStep : span / 100.0;
  const double hMin = opts.minStepFactor * timeScale;
  double t = t0;
  OdeState<N> k1 = field(t, y);
  OdeState<N> k2, k3, k4, k5, k6, k7, tmp, yNew;
  std::size_t steps = 0;
  while (t < t1) {
    if (++steps > opts.maxSteps) throw StepFailure("too many steps");
    bool last = false;
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    k2 = field(t + c2 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = field(t + c3 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = field(t + c4 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                           a54 * k4[i]);
    k5 = field(t + c5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                           a64 * k4[i] + a65 * k5[i]);
    k6 = field(t + h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      yNew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                            b5 * k5[i] + b6 * k6[i]);
    k7 = field(t + h, yNew);

    double errNorm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                              e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale =
          opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(yNew[i]));
      errNorm = std::max(errNorm, std::abs(err) / scale);
    }
    if (!std::isfinite(errNorm)) errNorm = 1e10;

    if (errNorm <= 1.0) {
      t = last ? t1 : t + h;
      y = yNew;
      k1 = k7;
      if (observer) (*observer)(t, y);
      const double grow =
          errNorm == 0.0 ? 5.0
                         : std::min(5.0, 0.9 * std::pow(errNorm, -0.2));
      h *= std::max(1.0, grow);
    } else {
      h *= std::max(0.1, 0.9 * std::pow(errNorm, -0.2));
      if (h < hMin) {
        throw StepFailure("step size " + formatReal(h) +
                          " underflowed at t = " + formatReal(t));
      }
    }
  }
  return y;
}

template <std::size_t N, typename Field>
OdeState<N> dormandPrince(Field&& field, OdeState<N> y, double t0, double t1,
                          const OdeOptions& opts, double timeScale) {
  struct Ignore {
    void operator()(double, const OdeState<N>&) {}
  };
  return dormandPrince<N>(field, y, t0, t1, opts, timeScale,
                          static_cast<Ignore*>(nullptr));
}

}  // namespace lvp
