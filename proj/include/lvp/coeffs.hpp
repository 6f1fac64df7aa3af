#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lvp/exponent.hpp"

namespace lvp {

/// Absolute tolerance on computed extrema.
inline constexpr double kTolExtremum = 1e-10;
/// Absolute tolerance on L^p-average quadrature.
inline constexpr double kTolQuad = 1e-10;

/// One term cosCoeff*cos(2 pi k t/T) + sinCoeff*sin(2 pi k t/T).
struct Harmonic {
  int k = 1;
  double cosCoeff = 0.0;
  double sinCoeff = 0.0;

  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// A continuous T-periodic coefficient: either a constant or a finite
/// trigonometric polynomial c0 + sum of harmonics. The period is supplied by
/// the caller at evaluation time.
class PeriodicCoefficient {
 public:
  enum class Kind { constant, trigonometric };

  PeriodicCoefficient() = default;

  static PeriodicCoefficient constant(double value);
  /// Throws InvalidArgument on non-finite data, k < 1 or repeated k.
  static PeriodicCoefficient trigonometric(double c0,
                                           std::vector<Harmonic> harmonics);

  Kind kind() const { return kind_; }
  bool isConstant() const { return kind_ == Kind::constant; }
  /// Constant value, or c0 for the trigonometric kind.
  double offset() const { return c0_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  /// Exact mean over one period.
  double mean() const { return c0_; }

  double operator()(double t, double T) const;

  /// Exact integral over [t0, t1] from the closed-form antiderivative.
  double integral(double t0, double t1, double T) const;

  friend bool operator==(const PeriodicCoefficient&,
                         const PeriodicCoefficient&) = default;

 private:
  double antiderivative(double t, double T) const;

  Kind kind_ = Kind::constant;
  double c0_ = 0.0;
  std::vector<Harmonic> harmonics_;
};

struct CoeffStats {
  double phiL = 0.0;
  double phiM = 0.0;
  double phiBar = 0.0;
};

/// Value of the coefficient at time t.
double eval(const PeriodicCoefficient& coef, double T, double t);

/// Minimum, maximum and mean over one period.
CoeffStats stats(const PeriodicCoefficient& coef, double T);

/// (1/T int_0^T phi^p)^(1/p), or the maximum for p = inf.
/// Throws NegativeIntegrand if the coefficient dips below -kTolExtremum.
double lpAverage(const PeriodicCoefficient& coef, double T, const Exponent& p);

/// L^p norm of |phi|: T^(1/p) times the L^p-average of |phi|.
double lpNorm(const PeriodicCoefficient& coef, double T, const Exponent& p);

/// (min, max) of num/den over one period. Throws ZeroDenominator if
/// den_L <= 0.
std::pair<double, double> ratioExtrema(const PeriodicCoefficient& num,
                                       const PeriodicCoefficient& den,
                                       double T);

/// Global (min, max) of an arbitrary continuous T-periodic function by dense
/// sampling followed by golden-section refinement of the best brackets.
std::pair<double, double> periodicExtrema(const std::function<double(double)>& f,
                                          double T,
                                          std::size_t samples = 4096);

/// Period, and the six coefficients of
///   u' = u (a - b u - c v),  v' = v (d + e u - f v).
struct SystemSpec {
  double T = 1.0;
  PeriodicCoefficient a, b, c, d, e, f;

  /// Throws ValidationError naming the violated invariant.
  void validate() const;

  bool allConstant() const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// System with every coefficient constant.
SystemSpec constantSystem(double T, double a, double b, double c, double d,
                          double e, double f);

}  // namespace lvp
