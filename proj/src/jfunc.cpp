#include "lvp/jfunc.hpp"

#include <cmath>
#include <numbers>

#include "lvp/numerics.hpp"

namespace lvp {

Exponent conjugate(const Exponent& p) { return p.conjugate(); }

JValue angularIntegral(const Exponent& q) {
  if (q.isInfinite()) return {8.0, false};
  const double exponent = q.value();
  if (exponent > kJLargeQ) return {8.0, true};
  if (exponent == 1.0) return {2.0 * std::numbers::pi, false};
  // On [0, pi/4] cos >= sin, so with r = tan t the integrand is
  // cos^-2 (1 + r^{2q})^{-1/q}; the 8-fold symmetry covers [0, 2 pi].
  auto integrand = [exponent](double t) {
    const double c = std::cos(t);
    const double r = std::tan(t);
    return std::pow(1.0 + std::pow(r, 2.0 * exponent), -1.0 / exponent) /
           (c * c);
  };
  const double quarter = numerics::adaptiveSimpson(
      integrand, 0.0, 0.25 * std::numbers::pi, kTolJ / 80.0, 30);
  return {8.0 * quarter, false};
}

double J(const Exponent& q) { return angularIntegral(q).value; }

double F(const Exponent& q) {
  return J(q) / std::exp2(2.0 - q.reciprocal());
}

double scriptF(const Exponent& p) { return F(p.conjugate()); }

}  // namespace lvp
