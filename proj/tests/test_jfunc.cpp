#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lvp/jfunc.hpp"
#include "lvp/numerics.hpp"
#include "oracles.hpp"

using lvp::Exponent;

namespace {
Exponent fin(double v) { return Exponent::finite(v); }
}

TEST_CASE("closed-form and oracle values of J") {
  CHECK(std::abs(lvp::J(fin(1.0)) - 2 * std::numbers::pi) <= 1e-9);
  CHECK(lvp::J(Exponent::infinity()) == 8.0);
  CHECK(std::abs(lvp::J(fin(2.0)) - 4.0 * oracle::ellipticK(0.5)) <= 1e-9);
  CHECK(std::abs(lvp::J(fin(100.0)) - 7.99967340518) <= 1e-9);
}

TEST_CASE("full-period integral agrees with the symmetry reduction") {
  for (double q : {1.3, 2.0, 3.7, 12.0}) {
    // Direct Gauss over [0, 2pi] in panels aligned with the kinks.
    double full = 0.0;
    for (int k = 0; k < 4; ++k) {
      full += lvp::numerics::refinedGauss(
                  [q](double t) {
                    return std::pow(std::pow(std::abs(std::cos(t)), 2 * q) +
                                        std::pow(std::abs(std::sin(t)), 2 * q),
                                    -1.0 / q);
                  },
                  k * std::numbers::pi / 2, (k + 1) * std::numbers::pi / 2,
                  1e-13)
                  .value;
    }
    CHECK(std::abs(lvp::J(fin(q)) - full) <= 1e-9);
  }
}

TEST_CASE("large q short-circuits to the limit") {
  const lvp::JValue v = lvp::angularIntegral(fin(2e6));
  CHECK(v.shortCircuited);
  CHECK(v.value == 8.0);
  CHECK_FALSE(lvp::angularIntegral(fin(1e5)).shortCircuited);
}

TEST_CASE("F and scriptF endpoints and the p = q = 2 value") {
  CHECK(std::abs(lvp::F(fin(1.0)) - std::numbers::pi) <= 1e-10);
  CHECK(lvp::F(Exponent::infinity()) == 2.0);
  CHECK(lvp::scriptF(fin(1.0)) == 2.0);
  CHECK(std::abs(lvp::scriptF(Exponent::infinity()) - std::numbers::pi) <= 1e-10);
  CHECK(std::abs(lvp::F(fin(2.0)) - 2.62205755429212) <= 1e-9);
  CHECK(lvp::scriptF(fin(2.0)) == lvp::F(fin(2.0)));
  CHECK(lvp::scriptF(fin(4.0)) == lvp::F(fin(4.0 / 3.0)));
}

TEST_CASE("monotonicity and range on the quarter grid") {
  double prevJ = 0.0, prevF = 1e9, prevS = 0.0;
  for (double q = 1.0; q <= 50.0; q += 0.25) {
    const double j = lvp::J(fin(q));
    const double f = lvp::F(fin(q));
    CHECK(j - prevJ > 10 * lvp::kTolJ);
    CHECK(prevF - f > 10 * lvp::kTolJ);
    prevJ = j;
    prevF = f;
  }
  CHECK(prevF - lvp::F(Exponent::infinity()) > 10 * lvp::kTolJ);
  for (double p = 1.0; p <= 50.0; p += 0.25) {
    const double s = lvp::scriptF(fin(p));
    CHECK(s >= 2.0 - lvp::kTolJ);
    CHECK(s <= std::numbers::pi + lvp::kTolJ);
    if (p > 1.0) CHECK(s - prevS > 10 * lvp::kTolJ);
    prevS = s;
  }
}
