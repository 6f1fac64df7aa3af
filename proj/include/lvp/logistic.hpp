#pragma once

#include <cstddef>
#include <vector>

#include "lvp/coeffs.hpp"

namespace lvp {

inline constexpr double kTolPeriodic = 1e-9;
inline constexpr double kTolLogisticResidual = 1e-8;

/// Sampled positive T-periodic solution of u' = u (growth - damping u).
///
/// Samples sit on a uniform grid t_i = i T / N, i = 0..N, together with the
/// exact derivatives from the equation; between samples the orbit is the
/// cubic Hermite interpolant. Values at the 8 Gauss nodes of every grid
/// interval are stored so that weighted averages are quadrature-exact.
class PeriodicOrbit1D {
 public:
  enum class Interpolation { cubicHermite };

  PeriodicOrbit1D(double T, std::vector<double> values,
                  std::vector<double> slopes, std::vector<double> nodeValues,
                  double residual);

  double period() const { return T_; }
  std::size_t intervals() const { return values_.size() - 1; }
  double time(std::size_t i) const;
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& slopes() const { return slopes_; }
  /// Values at the Gauss nodes, interval-major (8 per interval).
  const std::vector<double>& nodeValues() const { return nodeValues_; }
  Interpolation interpolation() const { return Interpolation::cubicHermite; }

  /// Interpolated value at any t (periodic extension).
  double operator()(double t) const;

  double minValue() const;
  double maxValue() const;
  /// |theta(0) - theta(T)| / max theta.
  double periodicityDefect() const;
  /// Max over grid intervals of |Delta theta - int theta (a - b theta)|.
  double odeResidual() const { return residual_; }

 private:
  double T_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  std::vector<double> nodeValues_;
  double residual_;
};

/// The unique positive T-periodic solution of u' = u (growth - damping u),
/// built from the linear equation for w = 1/u. Throws NoPositiveSolution if
/// the mean of growth is <= 0, ValidationError if damping is not positive.
PeriodicOrbit1D periodicLogistic(const PeriodicCoefficient& growth,
                                 const PeriodicCoefficient& damping, double T,
                                 std::size_t gridIntervals = 2048);

/// (1/T) int_0^T weight(t) theta(t) dt.
double weightedAverage(const PeriodicCoefficient& weight,
                       const PeriodicOrbit1D& orbit);

}  // namespace lvp
