#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lvp/coeffs.hpp"
#include "lvp/exponent.hpp"
#include "lvp/ode.hpp"

namespace lvp {

inline constexpr double kTolFloquet = 1e-8;
inline constexpr double kTolOrbitPeriodic = 1e-9;

using State2 = std::array<double, 2>;
using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Right-hand side of the system at (t, u, v).
State2 lotkaVolterraField(const SystemSpec& spec, double t, const State2& s);

/// Jacobian of the field with respect to (u, v).
Matrix2 lotkaVolterraJacobian(const SystemSpec& spec, double t,
                              const State2& s);

struct Trajectory {
  std::vector<double> t;
  std::vector<State2> y;
};

/// Adaptive solution from state0 at t0 to t1 (accepted steps recorded).
/// Throws InvalidArgument unless state0 > 0 and t1 > t0; StepFailure if the
/// step size underflows.
Trajectory integrate(const SystemSpec& spec, const State2& state0, double t0,
                     double t1, const OdeOptions& opts = {});

/// Solution at t = T from state0 at t = 0.
State2 poincareMap(const SystemSpec& spec, const State2& state0,
                   const OdeOptions& opts = {});

/// A T-periodic solution sampled on a uniform grid t_i = i T / N (i = 0..N)
/// with field derivatives for cubic Hermite interpolation.
struct PeriodicOrbit2D {
  double T = 1.0;
  std::vector<double> t;
  std::vector<double> u, v;
  std::vector<double> du, dv;
  double periodicityResidual = 0.0;  ///< |x(T) - x(0)|_inf
  double newtonResidual = 0.0;       ///< |P(x) - x|_inf at the last iterate
  int iterations = 0;

  State2 start() const { return {u.front(), v.front()}; }
  std::size_t intervals() const { return t.size() - 1; }
  /// Interpolated state at any t (periodic extension).
  State2 operator()(double time) const;
  State2 maxima() const;
  State2 minima() const;
};

struct NewtonOptions {
  int maxIterations = 50;
  double tolerance = 1e-10;
  /// Finite-difference step is fdStep * (1 + |component|).
  double fdStep = 1e-7;
  std::size_t samples = 512;
  OdeOptions ode{1e-12, 1e-14};
};

/// Newton on P(x) - x from guess, with step halving to stay in the open
/// quadrant. Throws NoConvergence after maxIterations, NonPositive if no
/// damped step keeps the iterate positive.
PeriodicOrbit2D findCoexistence(const SystemSpec& spec, const State2& guess,
                                const NewtonOptions& opts = {});

/// Samples the T-periodic solution through a known start point.
PeriodicOrbit2D sampleOrbit(const SystemSpec& spec, const State2& start,
                            std::size_t samples, const OdeOptions& opts);

enum class FloquetClass {
  asymptoticallyStable,
  linearlyStableNonstrict,
  unstable,
};

std::string toString(FloquetClass c);

struct FloquetData {
  Matrix2 monodromy{};
  std::array<std::complex<double>, 2> multipliers{};
  FloquetClass classification = FloquetClass::unstable;
};

/// Eigenvalues of a 2x2 matrix.
std::array<std::complex<double>, 2> eigenvalues(const Matrix2& m);

/// Asymptotically stable iff both moduli < 1 - tol; linearly stable
/// (non-strict) iff both <= 1 + tol; unstable otherwise.
FloquetClass classifyMultipliers(
    const std::array<std::complex<double>, 2>& multipliers,
    double tol = kTolFloquet);

/// Monodromy of the variational equation along the orbit and its
/// multipliers.
FloquetData floquet(const SystemSpec& spec, const PeriodicOrbit2D& orbit,
                    const OdeOptions& opts = {1e-12, 1e-14});

/// exp(int_0^T trace of the Jacobian along the orbit), by quadrature.
double liouvilleDeterminant(const SystemSpec& spec,
                            const PeriodicOrbit2D& orbit);

/// (L^p-average of u, L^p-average of v) over the sampled orbit.
std::pair<double, double> orbitAverages(const PeriodicOrbit2D& orbit,
                                        const Exponent& p);

struct PredictionCheck {
  std::string name;
  double slack = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<PredictionCheck> checks;
  bool allPassed = false;
};

/// Sup-norm bounds max u <= U + 1e-6, max v <= V + 1e-6 and membership of
/// the L^p-average pair in C_p for p in {1, 1.5, 2, 4, 10, inf}.
VerificationReport verifyPredictions(const SystemSpec& spec,
                                     const PeriodicOrbit2D& orbit,
                                     double slackTolerance = 1e-6);

struct MultiStartResult {
  /// Distinct orbits (starts closer than 1e-6 merged), ordered
  /// lexicographically by start point.
  std::vector<PeriodicOrbit2D> orbits;
  std::size_t converged = 0;
  std::size_t failed = 0;
  /// Largest pairwise distance between converged start points.
  double spread = 0.0;
};

/// Newton from `count` pseudo-random guesses in (0, U] x (0, V], run in
/// parallel; the result does not depend on scheduling.
MultiStartResult multiStart(const SystemSpec& spec, std::size_t count,
                            std::uint64_t seed = 20240611,
                            const NewtonOptions& opts = {});

}  // namespace lvp
