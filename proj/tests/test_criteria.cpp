#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lvp/constant_case.hpp"
#include "lvp/criteria.hpp"
#include "lvp/jfunc.hpp"

using lvp::Exponent;

namespace {

Exponent fin(double v) { return Exponent::finite(v); }

lvp::SystemSpec benchmark(double T = 1.0) {
  lvp::ConstantSystem s = lvp::exampleOneSystem();
  s.T = T;
  return s.toSpec();
}

bool hasNote(const lvp::TestResult& r, const std::string& needle) {
  for (const auto& d : r.diagnostics) {
    if (d.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("conditions 18 and 19") {
  const auto c18 = lvp::testCondition18(benchmark());
  CHECK(c18.passed);
  CHECK(c18.lhs == doctest::Approx(2.0203 / 2.0102).epsilon(1e-14));
  const auto c19 = lvp::testCondition19(benchmark());
  CHECK(c19.passed);
  CHECK(c19.rhs == doctest::Approx(1.0 / 0.9898).epsilon(1e-14));
  CHECK(c19.lhs == doctest::Approx(0.0051 / 2).epsilon(1e-14));
  const auto tie = lvp::testCondition19(lvp::constantSystem(1, 1, 1, 1, 1, 1, 1));
  CHECK_FALSE(tie.passed);
  CHECK(hasNote(tie, "borderline"));
  CHECK_FALSE(lvp::testCondition18(lvp::constantSystem(1, -1, 1, 1, 1, 1, 1)).passed);
}

TEST_CASE("results carry p and its conjugate") {
  for (const Exponent& p : {fin(1.0), fin(3.0), Exponent::infinity()}) {
    for (const lvp::TestResult& r :
         {lvp::unifiedLpTest(benchmark(), p), lvp::intertwinedTest(benchmark(), p),
          lvp::weakIntertwinedTest(benchmark(), p)}) {
      REQUIRE(r.p.has_value());
      CHECK(*r.q == p.conjugate());
      CHECK(r.margin == doctest::Approx(r.rhs - r.lhs));
      CHECK(r.passed == (r.margin >= 0.0));
      CHECK(r.rhs == lvp::scriptF(p));
    }
  }
}

TEST_CASE("unified test") {
  const auto r = lvp::unifiedLpTest(benchmark(), Exponent::infinity());
  CHECK(r.lhs == doctest::Approx(3.15274).epsilon(1e-5));
  CHECK_FALSE(r.passed);
  const auto s = lvp::unifiedLpTest(benchmark(0.1), Exponent::infinity());
  CHECK(s.lhs == doctest::Approx(0.315274).epsilon(1e-5));
  CHECK(s.passed);
  // c -> 0: the square-root term vanishes
  lvp::ConstantSystem tiny = lvp::exampleOneSystem();
  tiny.c = 1e-9;
  const auto t = lvp::unifiedLpTest(tiny.toSpec(), Exponent::infinity());
  const lvp::RegionBounds uv = lvp::computeUV(tiny.toSpec());
  CHECK(t.lhs == doctest::Approx(0.5 * (uv.U + 2 * uv.V)).epsilon(1e-4));
}

TEST_CASE("intertwined and weak tests on the benchmark system") {
  const auto i = lvp::intertwinedTest(benchmark(), Exponent::infinity());
  CHECK(std::abs(i.lhs - 3.142588310889437) <= 1e-9);
  CHECK(i.margin == doctest::Approx(-9.957e-4).epsilon(1e-3));
  const auto i1 = lvp::intertwinedTest(benchmark(), fin(1.0));
  CHECK(std::abs(i1.lhs - 3.142046766180634) <= 1e-9);
  CHECK_FALSE(i1.passed);
  const auto w = lvp::weakIntertwinedTest(benchmark(), Exponent::infinity());
  CHECK(std::abs(w.lhs - 3.152736037828660) <= 1e-9);
  CHECK(w.lhs >= i.lhs);
  CHECK(lvp::intertwinedTest(benchmark(0.1), Exponent::infinity()).passed);
}

TEST_CASE("unified and weak coincide at p = inf for constant coefficients") {
  for (const auto& spec : {benchmark(), benchmark(0.3), lvp::constantSystem(1, 3, 1, 1, 1, 1, 1)}) {
    CHECK(std::abs(lvp::unifiedLpTest(spec, Exponent::infinity()).lhs -
                   lvp::weakIntertwinedTest(spec, Exponent::infinity()).lhs) <= 1e-12);
  }
}

TEST_CASE("endpoint formulas") {
  const auto spec = benchmark();
  CHECK(lvp::intertwinedTest(spec, fin(1.0)).lhs == lvp::l1Condition(spec).lhs);
  const lvp::RegionBounds uv = lvp::computeUV(spec);
  const double remark3 =
      std::sqrt(0.0051 * 0.9898 * uv.U * uv.V) + 0.5 * (uv.U + 2 * uv.V);
  CHECK(std::abs(lvp::lInfCondition(spec).lhs - remark3) <= 1e-12);
  // joint maximum never exceeds the separate maxima
  lvp::SystemSpec seasonal = lvp::constantSystem(1, 1.5, 1, 0.3, 0.2, 0.4, 1);
  seasonal.a = lvp::PeriodicCoefficient::trigonometric(1.5, {{1, 0.3, 0.4}});
  seasonal.c = lvp::PeriodicCoefficient::trigonometric(0.3, {{1, 0.05, 0.0}});
  CHECK(lvp::intertwinedTest(seasonal, fin(1.0)).lhs >=
        lvp::l1Condition(seasonal).lhs - 1e-12);
}

TEST_CASE("shrinking the period scales every lhs") {
  for (double s : {0.5, 0.1, 0.01}) {
    for (const Exponent& p : {fin(1.0), fin(2.0), Exponent::infinity()}) {
      const auto base = lvp::intertwinedTest(benchmark(), p);
      const auto scaled = lvp::intertwinedTest(benchmark(s), p);
      CHECK(scaled.lhs == doctest::Approx(s * base.lhs).epsilon(1e-9));
      CHECK(scaled.rhs == base.rhs);
    }
  }
  bool was = false;
  for (double s = 1.0; s > 0.01; s *= 0.8) {
    const bool now = lvp::intertwinedTest(benchmark(s), Exponent::infinity()).passed;
    CHECK((now || !was));
    was = now;
  }
}

TEST_CASE("scanP conclusions") {
  const auto grid = std::vector<Exponent>{fin(1.0), fin(2.0), Exponent::infinity()};
  const auto r = lvp::scanP(benchmark(), grid);
  CHECK((r.conclusion == lvp::Conclusion::globallyStableVia1819));
  CHECK(r.results.size() == 2 + 3 * grid.size());
  for (const auto& t : r.results) {
    if (t.name == "intertwined") CHECK_FALSE(t.passed);
  }
  const auto s = lvp::scanP(benchmark(0.1), {Exponent::infinity()});
  CHECK(s.bestP.has_value());
  CHECK(s.bestP->isInfinite());
  // b f = c e: condition19 fails by a tie
  const auto u = lvp::scanP(lvp::constantSystem(0.1, 3, 1, 1, 1, 1, 1),
                            {Exponent::infinity()});
  CHECK_FALSE(u.uniqueness1819.second);
  CHECK((u.conclusion == lvp::Conclusion::uniqueAsymptoticallyStable));
  const auto n = lvp::scanP(lvp::constantSystem(1, 1, 1, 1, -10, 1, 1), grid);
  CHECK((n.conclusion == lvp::Conclusion::noCoexistence));
  CHECK_THROWS(lvp::scanP(benchmark(), {}));
}

TEST_CASE("vacuous tests without a coexistence state") {
  const auto r = lvp::intertwinedTest(lvp::constantSystem(1, 1, 1, 1, -10, 1, 1), fin(2.0));
  CHECK(hasNote(r, "vacuous"));
}
