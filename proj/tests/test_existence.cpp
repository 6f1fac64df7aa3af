#include <random>

#include "doctest.h"
#include "lvp/constant_case.hpp"
#include "lvp/existence.hpp"

using lvp::constantSystem;

TEST_CASE("trivial state stable") {
  const auto c = lvp::classifyBoundary(constantSystem(1.0, -1, 1, 1, -1, 1, 1));
  CHECK(c.trivialStable);
  CHECK_FALSE(c.thetaLambda.has_value());
  CHECK_FALSE(c.thetaMu.has_value());
  CHECK_FALSE(c.preyOnlyStable.has_value());
  CHECK_FALSE(c.coexistenceExists);
  CHECK_FALSE(lvp::coexistenceExists(constantSystem(1.0, -1, 1, 1, -1, 1, 1)).exists);
}

TEST_CASE("classical set with a declining predator") {
  const auto spec = constantSystem(1.0, 1, 1, 1, -0.5, 1, 1);
  const auto c = lvp::classifyBoundary(spec);
  REQUIRE(c.thetaLambda.has_value());
  CHECK((*c.thetaLambda)(0.4) == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(c.preyOnlyStable.has_value());
  CHECK_FALSE(*c.preyOnlyStable);
  CHECK_FALSE(c.predatorOnlyStable.has_value());
  CHECK(c.coexistenceExists);
  const auto v = lvp::coexistenceExists(spec);
  CHECK(v.exists);
  CHECK(v.margins.first == doctest::Approx(0.5));
  CHECK(v.margins.second == doctest::Approx(1.0));
  CHECK_FALSE(v.diagnostics.empty());
}

TEST_CASE("benchmark constants") {
  const auto c = lvp::classifyBoundary(lvp::exampleOneSystem().toSpec());
  CHECK(c.lambda == 2.0102);
  CHECK(c.mu == 2.0203);
  CHECK(c.thetaLambda.has_value());
  CHECK(c.thetaMu.has_value());
  CHECK(c.coexistenceExists);
}

TEST_CASE("predator wins") {
  const auto c = lvp::classifyBoundary(constantSystem(1.0, 1, 1, 5, 1, 1, 1));
  REQUIRE(c.predatorOnlyStable.has_value());
  CHECK(*c.predatorOnlyStable);
  CHECK_FALSE(c.coexistenceExists);
}

TEST_CASE("borderline margins are flagged") {
  // lambda = (1/T) int c theta_mu exactly: a = c d / f
  const auto v = lvp::coexistenceExists(constantSystem(1.0, 2, 1, 2, 1, 1, 1));
  CHECK_FALSE(v.exists);
  bool flagged = false;
  for (const auto& d : v.diagnostics) flagged = flagged || d.find("borderline") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("constant systems: existence iff positive equilibrium, exclusivity") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int positive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const lvp::ConstantSystem sys{1.0,          2 * u(rng),
                                  0.1 + std::abs(u(rng)), 0.1 + std::abs(u(rng)),
                                  2 * u(rng),   0.1 + std::abs(u(rng)),
                                  0.1 + std::abs(u(rng))};
    const auto c = lvp::classifyBoundary(sys.toSpec());
    const lvp::Point eq = lvp::equilibrium(sys);
    const bool eqPositive = eq.x > 1e-9 && eq.y > 1e-9;
    if (eq.x > -1e-9 && eq.x < 1e-9) continue;
    if (eq.y > -1e-9 && eq.y < 1e-9) continue;
    positive += eqPositive;
    CHECK(c.coexistenceExists == eqPositive);
    const bool anyStable = c.trivialStable || c.preyOnlyStable.value_or(false) ||
                           c.predatorOnlyStable.value_or(false);
    if (anyStable) CHECK_FALSE(c.coexistenceExists);
  }
  CHECK(positive > 20);
}
