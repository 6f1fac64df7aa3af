#include "lvp/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "lvp/errors.hpp"
#include "lvp/numerics.hpp"

namespace lvp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void requirePeriod(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw InvalidArgument("period must be positive, got " + formatReal(T));
  }
}

}  // namespace

PeriodicCoefficient PeriodicCoefficient::constant(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("non-finite constant");
  PeriodicCoefficient coef;
  coef.kind_ = Kind::constant;
  coef.c0_ = value;
  return coef;
}

PeriodicCoefficient PeriodicCoefficient::trigonometric(
    double c0, std::vector<Harmonic> harmonics) {
  if (!std::isfinite(c0)) throw InvalidArgument("non-finite c0");
  std::set<int> seen;
  for (const Harmonic& h : harmonics) {
    if (h.k < 1) throw InvalidArgument("harmonic index must be >= 1");
    if (!std::isfinite(h.cosCoeff) || !std::isfinite(h.sinCoeff)) {
      throw InvalidArgument("non-finite harmonic coefficient");
    }
    if (!seen.insert(h.k).second) {
      throw InvalidArgument("repeated harmonic k = " + std::to_string(h.k));
    }
  }
  PeriodicCoefficient coef;
  coef.kind_ = Kind::trigonometric;
  coef.c0_ = c0;
  coef.harmonics_ = std::move(harmonics);
  return coef;
}

double PeriodicCoefficient::operator()(double t, double T) const {
  if (kind_ == Kind::constant) return c0_;
  // Reduce to one period so that eval(t) == eval(t + T) bit for bit.
  const double phase = kTwoPi * (t / T - std::floor(t / T));
  double value = c0_;
  for (const Harmonic& h : harmonics_) {
    const double angle = phase * h.k;
    value += h.cosCoeff * std::cos(angle) + h.sinCoeff * std::sin(angle);
  }
  return value;
}

double PeriodicCoefficient::antiderivative(double t, double T) const {
  double value = c0_ * t;
  for (const Harmonic& h : harmonics_) {
    const double omega = kTwoPi * h.k / T;
    const double angle = omega * t;
    value += (h.cosCoeff * std::sin(angle) - h.sinCoeff * std::cos(angle)) /
             omega;
  }
  return value;
}

double PeriodicCoefficient::integral(double t0, double t1, double T) const {
  if (kind_ == Kind::constant) return c0_ * (t1 - t0);
  return antiderivative(t1, T) - antiderivative(t0, T);
}

double eval(const PeriodicCoefficient& coef, double T, double t) {
  requirePeriod(T);
  return coef(t, T);
}

std::pair<double, double> periodicExtrema(const std::function<double(double)>& f,
                                          double T, std::size_t samples) {
  requirePeriod(T);
  const double h = T / static_cast<double>(samples);
  std::size_t iMin = 0;
  std::size_t iMax = 0;
  double vMin = f(0.0);
  double vMax = vMin;
  for (std::size_t i = 1; i < samples; ++i) {
    const double v = f(h * static_cast<double>(i));
    if (v < vMin) {
      vMin = v;
      iMin = i;
    }
    if (v > vMax) {
      vMax = v;
      iMax = i;
    }
  }
  const double xTol = 1e-14 * T;
  auto refine = [&](std::size_t i, double sign) {
    const double center = h * static_cast<double>(i);
    const auto [x, v] = numerics::goldenMaximize(
        [&](double t) { return sign * f(t); }, center - h, center + h, xTol);
    (void)x;
    return sign * v;
  };
  vMax = std::max(vMax, refine(iMax, 1.0));
  vMin = std::min(vMin, refine(iMin, -1.0));
  return {vMin, vMax};
}

CoeffStats stats(const PeriodicCoefficient& coef, double T) {
  requirePeriod(T);
  if (coef.isConstant()) return {coef.offset(), coef.offset(), coef.offset()};
  const auto [lo, hi] =
      periodicExtrema([&](double t) { return coef(t, T); }, T);
  return {lo, hi, coef.mean()};
}

namespace {

// Mean of (|phi|/scale)^p over one period, to kTolQuad relative to scale^p.
double scaledPowerMean(const PeriodicCoefficient& coef, double T, double p,
                       double scale) {
  auto integrand = [&](double t) {
    return std::pow(std::abs(coef(t, T)) / scale, p);
  };
  const double tol = kTolQuad / std::max(1.0, scale) * T;
  return numerics::refinedGauss(integrand, 0.0, T, tol).value / T;
}

}  // namespace

double lpAverage(const PeriodicCoefficient& coef, double T, const Exponent& p) {
  requirePeriod(T);
  const CoeffStats s = stats(coef, T);
  if (s.phiL < -kTolExtremum) {
    throw NegativeIntegrand("L^p-average of a coefficient with minimum " +
                            formatReal(s.phiL));
  }
  if (coef.isConstant()) return std::max(0.0, coef.offset());
  if (p.isInfinite()) return std::max(0.0, s.phiM);
  if (s.phiM <= 0.0) return 0.0;
  const double exponent = p.value();
  if (exponent == 1.0) return coef.mean();
  return s.phiM * std::pow(scaledPowerMean(coef, T, exponent, s.phiM),
                           1.0 / exponent);
}

double lpNorm(const PeriodicCoefficient& coef, double T, const Exponent& p) {
  requirePeriod(T);
  if (coef.isConstant()) {
    const double magnitude = std::abs(coef.offset());
    return p.isInfinite() ? magnitude
                          : magnitude * std::pow(T, 1.0 / p.value());
  }
  const CoeffStats s = stats(coef, T);
  const double peak = std::max(std::abs(s.phiL), std::abs(s.phiM));
  if (p.isInfinite()) return peak;
  if (peak == 0.0) return 0.0;
  const double exponent = p.value();
  return peak * std::pow(T * scaledPowerMean(coef, T, exponent, peak),
                         1.0 / exponent);
}

std::pair<double, double> ratioExtrema(const PeriodicCoefficient& num,
                                       const PeriodicCoefficient& den,
                                       double T) {
  requirePeriod(T);
  const CoeffStats ds = stats(den, T);
  if (ds.phiL <= 0.0) {
    throw ZeroDenominator("denominator minimum " + formatReal(ds.phiL) +
                          " is not positive");
  }
  if (num.isConstant() && den.isConstant()) {
    const double r = num.offset() / den.offset();
    return {r, r};
  }
  return periodicExtrema([&](double t) { return num(t, T) / den(t, T); }, T);
}

void SystemSpec::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw ValidationError("T > 0 violated (T = " + formatReal(T) + ")");
  }
  const std::pair<const char*, const PeriodicCoefficient*> positive[] = {
      {"b", &b}, {"c", &c}, {"e", &e}, {"f", &f}};
  for (const auto& [name, coef] : positive) {
    const double low = stats(*coef, T).phiL;
    if (!(low > 0.0)) {
      throw ValidationError(std::string(name) + "_L > 0 violated (" + name +
                            "_L = " + formatReal(low) + ")");
    }
  }
}

bool SystemSpec::allConstant() const {
  return a.isConstant() && b.isConstant() && c.isConstant() &&
         d.isConstant() && e.isConstant() && f.isConstant();
}

SystemSpec constantSystem(double T, double a, double b, double c, double d,
                          double e, double f) {
  SystemSpec spec;
  spec.T = T;
  spec.a = PeriodicCoefficient::constant(a);
  spec.b = PeriodicCoefficient::constant(b);
  spec.c = PeriodicCoefficient::constant(c);
  spec.d = PeriodicCoefficient::constant(d);
  spec.e = PeriodicCoefficient::constant(e);
  spec.f = PeriodicCoefficient::constant(f);
  return spec;
}

}  // namespace lvp
