#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvp/coeffs.hpp"
#include "lvp/existence.hpp"
#include "lvp/exponent.hpp"

namespace lvp {

/// One evaluation of a uniqueness/stability criterion.
struct TestResult {
  std::string name;
  std::optional<Exponent> p;  ///< absent for the classical conditions
  std::optional<Exponent> q;  ///< conjugate of p
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  ///< rhs - lhs (for two-sided tests: smaller slack)
  bool strict = false;  ///< strict tests pass iff margin > 0
  bool passed = false;
  std::vector<std::string> diagnostics;
};

enum class Conclusion {
  uniqueAsymptoticallyStable,
  globallyStableVia1819,
  inconclusive,
  noCoexistence,
};

std::string toString(Conclusion conclusion);

struct StabilityReport {
  BoundaryClassification classification;
  std::pair<bool, bool> uniqueness1819{false, false};
  std::vector<TestResult> results;
  std::optional<Exponent> bestP;
  Conclusion conclusion = Conclusion::inconclusive;
};

/// abar > 0 and -(e/b)_L < dbar/abar < (f/c)_L.
TestResult testCondition18(const SystemSpec& spec);

/// (b/e)_L > (c/f)_M.
TestResult testCondition19(const SystemSpec& spec);

/// Norm-envelope test:
///   T^{1/q} sqrt(cM eM alpha_p beta_p) + (bM alpha_1 + fM beta_1)/2 <= F(q)
/// with alpha_p = |a|_p / bL, beta_p = |d|_p / fL + (eM/fL) alpha_p.
TestResult unifiedLpTest(const SystemSpec& spec, const Exponent& p);

/// Region test:
///   T (sqrt(cM eM sup_{C_p} xy) + sup_{C_1}(bM x + fM y)/2) <= scriptF(p).
TestResult intertwinedTest(const SystemSpec& spec, const Exponent& p);

/// As intertwinedTest with the linear term also maximized over C_p.
TestResult weakIntertwinedTest(const SystemSpec& spec, const Exponent& p);

/// T sup_{(x,y) in C_1} (sqrt(cM eM x y) + (bM x + fM y)/2) against 2.
TestResult l1Condition(const SystemSpec& spec);

/// T (sqrt(cM eM U V) + (bM U + fM V)/2) against pi.
TestResult lInfCondition(const SystemSpec& spec);

/// Runs every test for each p of the grid and draws the conclusion.
/// Priority: globallyStableVia1819 > uniqueAsymptoticallyStable >
/// inconclusive; noCoexistence whenever no coexistence state exists.
StabilityReport scanP(const SystemSpec& spec, const std::vector<Exponent>& grid);

}  // namespace lvp
