#include "lvp/logistic.hpp"

#include <algorithm>
#include <cmath>

#include "lvp/errors.hpp"
#include "lvp/numerics.hpp"

namespace lvp {

PeriodicOrbit1D::PeriodicOrbit1D(double T, std::vector<double> values,
                                 std::vector<double> slopes,
                                 std::vector<double> nodeValues,
                                 double residual)
    : T_(T),
      values_(std::move(values)),
      slopes_(std::move(slopes)),
      nodeValues_(std::move(nodeValues)),
      residual_(residual) {
  if (values_.size() < 2 || slopes_.size() != values_.size() ||
      nodeValues_.size() != 8 * (values_.size() - 1)) {
    throw InvalidArgument("inconsistent orbit sample arrays");
  }
}

double PeriodicOrbit1D::time(std::size_t i) const {
  return T_ * static_cast<double>(i) / static_cast<double>(intervals());
}

double PeriodicOrbit1D::operator()(double t) const {
  const double phase = t / T_ - std::floor(t / T_);
  const double h = T_ / static_cast<double>(intervals());
  const double scaled = phase * static_cast<double>(intervals());
  std::size_t i = static_cast<std::size_t>(scaled);
  if (i >= intervals()) i = intervals() - 1;
  const double s = (scaled - static_cast<double>(i)) * h;
  return numerics::hermite(values_[i], slopes_[i], values_[i + 1],
                           slopes_[i + 1], h, s);
}

double PeriodicOrbit1D::minValue() const {
  return std::min(*std::min_element(values_.begin(), values_.end()),
                  *std::min_element(nodeValues_.begin(), nodeValues_.end()));
}

double PeriodicOrbit1D::maxValue() const {
  return std::max(*std::max_element(values_.begin(), values_.end()),
                  *std::max_element(nodeValues_.begin(), nodeValues_.end()));
}

double PeriodicOrbit1D::periodicityDefect() const {
  return std::abs(values_.front() - values_.back()) / maxValue();
}

namespace {

// One variation-of-constants step for w' = -growth w + damping from t0 to
// t1 = t0 + h:  w(t1) = exp(-G(t0,t1)) w(t0) + int_t0^t1 damping(s)
// exp(-G(s,t1)) ds, with G(s,t) = int_s^t growth exact.
double advance(const PeriodicCoefficient& growth,
               const PeriodicCoefficient& damping, double T, double t0,
               double t1, double w0) {
  const auto& rule = numerics::gauss8();
  const double half = 0.5 * (t1 - t0);
  const double mid = t0 + half;
  double forced = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double s = mid + half * rule.nodes[j];
    forced += rule.weights[j] * damping(s, T) *
              std::exp(-growth.integral(s, t1, T));
  }
  return std::exp(-growth.integral(t0, t1, T)) * w0 + half * forced;
}

}  // namespace

PeriodicOrbit1D periodicLogistic(const PeriodicCoefficient& growth,
                                 const PeriodicCoefficient& damping, double T,
                                 std::size_t gridIntervals) {
  if (!(T > 0.0)) throw InvalidArgument("period must be positive");
  if (gridIntervals < 2) throw InvalidArgument("need at least 2 intervals");
  const double lambda = growth.mean();
  if (!(lambda > 0.0)) {
    throw NoPositiveSolution("mean growth " + formatReal(lambda) +
                             " <= 0: no positive periodic solution");
  }
  if (!(stats(damping, T).phiL > 0.0)) {
    throw ValidationError("damping must be strictly positive");
  }

  const std::size_t n = gridIntervals;
  const double h = T / static_cast<double>(n);
  const auto& rule = numerics::gauss8();
  auto gridTime = [&](std::size_t i) {
    return T * static_cast<double>(i) / static_cast<double>(n);
  };

  std::vector<double> w(n + 1);
  std::vector<double> wNodes(8 * n);
  if (growth.isConstant() && damping.isConstant()) {
    std::fill(w.begin(), w.end(), damping.offset() / growth.offset());
    std::fill(wNodes.begin(), wNodes.end(), damping.offset() / growth.offset());
  } else {
    // Response to a zero start over one period fixes the periodic start:
    // w(T) = exp(-lambda T) w(0) + R  =>  w(0) = R / (1 - exp(-lambda T)).
    double response = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      response = advance(growth, damping, T, gridTime(i), gridTime(i + 1),
                         response);
    }
    w[0] = response / -std::expm1(-lambda * T);
    for (std::size_t i = 0; i < n; ++i) {
      const double t0 = gridTime(i);
      w[i + 1] = advance(growth, damping, T, t0, gridTime(i + 1), w[i]);
      for (std::size_t j = 0; j < 8; ++j) {
        const double s = t0 + 0.5 * h * (1.0 + rule.nodes[j]);
        wNodes[8 * i + j] = advance(growth, damping, T, t0, s, w[i]);
      }
    }
  }

  std::vector<double> theta(n + 1);
  std::vector<double> slope(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    theta[i] = 1.0 / w[i];
    const double t = gridTime(i);
    slope[i] = theta[i] * (growth(t, T) - damping(t, T) * theta[i]);
  }
  std::vector<double> thetaNodes(8 * n);
  for (std::size_t k = 0; k < thetaNodes.size(); ++k) {
    thetaNodes[k] = 1.0 / wNodes[k];
  }

  // Integral form of the equation on each interval, checked with the stored
  // node values: theta(t1) - theta(t0) = int theta (growth - damping theta).
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t0 = gridTime(i);
    double rhs = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
      const double s = t0 + 0.5 * h * (1.0 + rule.nodes[j]);
      const double th = thetaNodes[8 * i + j];
      rhs += rule.weights[j] * th * (growth(s, T) - damping(s, T) * th);
    }
    rhs *= 0.5 * h;
    residual = std::max(residual, std::abs(theta[i + 1] - theta[i] - rhs));
  }

  return PeriodicOrbit1D(T, std::move(theta), std::move(slope),
                         std::move(thetaNodes), residual);
}

double weightedAverage(const PeriodicCoefficient& weight,
                       const PeriodicOrbit1D& orbit) {
  const auto& rule = numerics::gauss8();
  const double T = orbit.period();
  const std::size_t n = orbit.intervals();
  const double h = T / static_cast<double>(n);
  numerics::CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    const double t0 = orbit.time(i);
    double panel = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
      const double s = t0 + 0.5 * h * (1.0 + rule.nodes[j]);
      panel += rule.weights[j] * weight(s, T) * orbit.nodeValues()[8 * i + j];
    }
    total += 0.5 * h * panel;
  }
  return total.value() / T;
}

}  // namespace lvp
