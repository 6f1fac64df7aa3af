#include <cmath>
#include <random>

#include "doctest.h"
#include "lvp/constant_case.hpp"
#include "lvp/criteria.hpp"
#include "lvp/errors.hpp"
#include "lvp/jfunc.hpp"

using lvp::ConstantSystem;
using lvp::Exponent;

namespace {
const ConstantSystem kEx = lvp::exampleOneSystem();
}

TEST_CASE("equilibrium") {
  const lvp::Point p = lvp::equilibrium(kEx);
  CHECK(std::abs(p.x - 2.000000254358003) <= 1e-14);
  CHECK(std::abs(p.y - 1.999950125881776) <= 1e-14);
  const lvp::Point q = lvp::equilibrium({1, 3, 1, 1, 1, 1, 1});
  CHECK(q.x == doctest::Approx(1.0));
  CHECK(q.y == doctest::Approx(2.0));
  const lvp::Point r = lvp::equilibrium({1, 1, 1, 1, -0.5, 1, 1});
  CHECK(r.x == doctest::Approx(0.75));
  CHECK(r.y == doctest::Approx(0.25));
  ConstantSystem bad = kEx;
  bad.c = -1.0;
  CHECK_THROWS_AS(bad.validate(), lvp::ValidationError);
}

TEST_CASE("k, h and signOK") {
  CHECK(std::abs(lvp::kValue(kEx) - 2.999950253060777) <= 1e-14);
  const lvp::HValue h1 = lvp::hOfP(kEx, 1.0);
  CHECK(h1.h == doctest::Approx(198.0793324451191).epsilon(1e-12));
  CHECK_FALSE(h1.signOK);
  CHECK(h1.base == doctest::Approx(-0.99995025306).epsilon(1e-10));
  const lvp::HValue h2 = lvp::hOfP(kEx, 2.0);
  CHECK(h2.h == doctest::Approx(800.2740840275984).epsilon(1e-9));
  CHECK_FALSE(h2.signOK);
  // zero base: pick T so that scriptF(2)/T = k
  ConstantSystem z = kEx;
  z.T = lvp::scriptF(Exponent::finite(2.0)) / lvp::kValue(kEx);
  const lvp::HValue h0 = lvp::hOfP(z, 2.0);
  CHECK(h0.h <= 1e-20);
  CHECK(h0.signOK);
}

TEST_CASE("G and the discriminant") {
  CHECK(lvp::gOfP(kEx, 1.0) == doctest::Approx(3.293276415637843).epsilon(1e-8));
  CHECK(lvp::gOfP(kEx, 2.0) == doctest::Approx(-744.7981031471379).epsilon(1e-8));
  CHECK(lvp::gOfP(kEx, 200.0) > 0.0);
  const lvp::RegionBounds uv = lvp::computeUV(kEx.toSpec());
  for (double p : {1.0, 1.5, 2.0, 5.0}) {
    const double g = lvp::gOfP(kEx, p);
    CHECK(lvp::discriminant(kEx, p) ==
          doctest::Approx(std::pow(uv.V, p - 1) * g).epsilon(1e-12));
  }
  ConstantSystem z = kEx;
  z.T = lvp::scriptF(Exponent::finite(2.0)) / lvp::kValue(kEx);
  CHECK(lvp::discriminant(z, 2.0) > 0.0);
}

TEST_CASE("check25 on the benchmark system") {
  const lvp::Check25 c = lvp::check25(kEx, 2.0);
  CHECK(c.pattern[0]);
  CHECK(c.pattern[1]);
  CHECK(c.pattern[2]);
  CHECK(c.limitPositive);
  CHECK_FALSE(c.signOK1);
  CHECK_FALSE(c.signOKStar);
  bool note = false;
  for (const auto& d : c.diagnostics) note = note || d == lvp::kSignDiscrepancyNote;
  CHECK(note);
  CHECK_THROWS(lvp::check25(kEx, 1.0));
}

TEST_CASE("check25 reports a pattern without a claim for other systems") {
  const lvp::Check25 c = lvp::check25({1, 3, 1, 1, 1, 1, 1}, 2.0);
  CHECK(c.g1 == lvp::gOfP({1, 3, 1, 1, 1, 1, 1}, 1.0));
}

TEST_CASE("curve tables") {
  const lvp::ExampleOneCurve curve = lvp::exampleOneCurve(kEx, {1.0, 2.0, 3.0});
  CHECK(curve.k == lvp::kValue(kEx));
  REQUIRE(curve.gValues.size() == 3);
  CHECK(curve.gValues[1].second == lvp::gOfP(kEx, 2.0));
  CHECK(curve.signPreconditionOK[0].second == false);
}

TEST_CASE("substitution identity puts points on the first boundary curve") {
  const lvp::RegionBounds uv = lvp::computeUV(kEx.toSpec());
  const double U = uv.U, V = uv.V;
  for (double p : {1.5, 2.0, 3.0}) {
    for (double x = 1.0; x < 2.0; x += 0.1) {
      const double w = std::pow(x, p);
      const double yp = std::pow(V, p - 1) * (kEx.a - kEx.b * std::pow(U, 1 - p) * w) / kEx.c;
      const double y = std::pow(yp, 1.0 / p);
      const double res = kEx.b * std::pow(U, 1 - p) * w + kEx.c * std::pow(V, 1 - p) * std::pow(y, p) - kEx.a;
      CHECK(std::abs(res) <= 1e-9);
    }
  }
}

TEST_CASE("guarded equivalence on random constant systems") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 25; ++trial) {
    const ConstantSystem s{0.05 + 0.6 * u(rng), 0.5 + 2 * u(rng), 0.5 + u(rng),
                           0.05 + 0.5 * u(rng), 0.2 + 2 * u(rng), 0.05 + 0.5 * u(rng),
                           0.5 + u(rng)};
    const lvp::Point eq = lvp::equilibrium(s);
    if (!(eq.x > 0 && eq.y > 0)) continue;
    const double p = 1.0 + 3.0 * u(rng);
    const lvp::HValue h = lvp::hOfP(s, p);
    if (!h.signOK) continue;
    const lvp::TestResult direct = lvp::intertwinedTest(s.toSpec(), Exponent::finite(p));
    const lvp::Quadratic24Max q = lvp::maxQuadratic24(s, p);
    if (q.empty) continue;
    if (std::abs(direct.margin) <= 1e-6 || std::abs(q.value) <= 1e-6 * (1 + h.h)) continue;
    ++checked;
    CHECK(direct.passed == (q.value <= 0.0));
  }
  CHECK(checked >= 10);
}

TEST_CASE("equilibrium lies in C_1") {
  for (const ConstantSystem& s : {kEx, ConstantSystem{1, 3, 1, 1, 1, 1, 1}}) {
    const lvp::Point p = lvp::equilibrium(s);
    CHECK(lvp::cpContains(lvp::makeRegion(s.toSpec(), Exponent::finite(1.0)), p.x, p.y));
  }
}
