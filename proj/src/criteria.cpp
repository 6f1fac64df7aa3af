#include "lvp/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lvp/errors.hpp"
#include "lvp/jfunc.hpp"
#include "lvp/region.hpp"

namespace lvp {

namespace {

void finish(TestResult& r) {
  r.margin = r.rhs - r.lhs;
  r.passed = r.strict ? r.margin > 0.0 : r.margin >= 0.0;
  if (std::abs(r.margin) <= kBorderline) {
    r.diagnostics.push_back("borderline: margin within 1e-12 of zero");
  }
}

TestResult withExponent(std::string name, const Exponent& p) {
  TestResult r;
  r.name = std::move(name);
  r.p = p;
  r.q = p.conjugate();
  return r;
}

void noteCoexistence(const SystemSpec& spec, TestResult& r) {
  if (!coexistenceExists(spec).exists) {
    r.diagnostics.push_back("vacuous: no coexistence state exists");
  }
}

}  // namespace

std::string toString(Conclusion conclusion) {
  switch (conclusion) {
    case Conclusion::uniqueAsymptoticallyStable:
      return "uniqueAsymptoticallyStable";
    case Conclusion::globallyStableVia1819:
      return "globallyStableVia1819";
    case Conclusion::inconclusive:
      return "inconclusive";
    case Conclusion::noCoexistence:
      return "noCoexistence";
  }
  return "unknown";
}

TestResult testCondition18(const SystemSpec& spec) {
  TestResult r;
  r.name = "condition18";
  r.strict = true;
  const double abar = spec.a.mean();
  const double lower = -ratioExtrema(spec.e, spec.b, spec.T).first;
  const double upper = ratioExtrema(spec.f, spec.c, spec.T).first;
  if (!(abar > 0.0)) {
    r.lhs = abar;
    r.rhs = 0.0;
    r.margin = abar;
    r.passed = false;
    r.diagnostics.push_back("requires abar > 0");
    return r;
  }
  const double ratio = spec.d.mean() / abar;
  r.lhs = ratio;
  r.rhs = upper;
  finish(r);
  // Two-sided: report the tighter of the two slacks.
  const double lowerSlack = ratio - lower;
  r.diagnostics.push_back("lower bound -(e/b)_L = " + formatReal(lower));
  if (lowerSlack < r.margin) {
    r.margin = lowerSlack;
    r.passed = r.margin > 0.0;
    if (std::abs(r.margin) <= kBorderline) {
      r.diagnostics.push_back("borderline: lower slack within 1e-12 of zero");
    }
  }
  return r;
}

TestResult testCondition19(const SystemSpec& spec) {
  TestResult r;
  r.name = "condition19";
  r.strict = true;
  r.rhs = ratioExtrema(spec.b, spec.e, spec.T).first;
  r.lhs = ratioExtrema(spec.c, spec.f, spec.T).second;
  finish(r);
  return r;
}

TestResult unifiedLpTest(const SystemSpec& spec, const Exponent& p) {
  TestResult r = withExponent("unifiedLp", p);
  const double T = spec.T;
  const double bL = stats(spec.b, T).phiL;
  const double bM = stats(spec.b, T).phiM;
  const double cM = stats(spec.c, T).phiM;
  const double eM = stats(spec.e, T).phiM;
  const double fL = stats(spec.f, T).phiL;
  const double fM = stats(spec.f, T).phiM;
  const Exponent one = Exponent::finite(1.0);
  auto alpha = [&](const Exponent& e) { return lpNorm(spec.a, T, e) / bL; };
  auto beta = [&](const Exponent& e, double alphaValue) {
    return lpNorm(spec.d, T, e) / fL + eM / fL * alphaValue;
  };
  const double alphaP = alpha(p);
  const double betaP = beta(p, alphaP);
  const double alpha1 = alpha(one);
  const double beta1 = beta(one, alpha1);
  const double leading = std::pow(T, r.q->reciprocal());
  r.lhs = leading * std::sqrt(cM * eM * alphaP * betaP) +
          0.5 * (bM * alpha1 + fM * beta1);
  r.rhs = F(*r.q);
  finish(r);
  noteCoexistence(spec, r);
  return r;
}

TestResult intertwinedTest(const SystemSpec& spec, const Exponent& p) {
  TestResult r = withExponent("intertwined", p);
  const RegionSpec region = makeRegion(spec, p);
  const RegionMaximum xy = supXY(region);
  const RegionMaximum linear = supLinearC1(
      region.withExponent(Exponent::finite(1.0)), region.bM, region.fM);
  r.lhs = spec.T * (std::sqrt(region.cM * region.eM * xy.value) +
                    0.5 * linear.value);
  r.rhs = scriptF(p);
  finish(r);
  if (xy.empty) r.diagnostics.push_back("empty-region: C_p is empty");
  if (linear.empty) r.diagnostics.push_back("empty-region: C_1 is empty");
  noteCoexistence(spec, r);
  return r;
}

TestResult weakIntertwinedTest(const SystemSpec& spec, const Exponent& p) {
  TestResult r = withExponent("weakIntertwined", p);
  const RegionSpec region = makeRegion(spec, p);
  const RegionMaximum xy = supXY(region);
  const RegionMaximum linear = supLinear(region, region.bM, region.fM);
  r.lhs = spec.T * (std::sqrt(region.cM * region.eM * xy.value) +
                    0.5 * linear.value);
  r.rhs = scriptF(p);
  finish(r);
  if (xy.empty) r.diagnostics.push_back("empty-region: C_p is empty");
  noteCoexistence(spec, r);
  return r;
}

TestResult l1Condition(const SystemSpec& spec) {
  const Exponent one = Exponent::finite(1.0);
  TestResult r = withExponent("l1Condition", one);
  const RegionSpec region = makeRegion(spec, one);
  const double cMeM = region.cM * region.eM;
  const RegionMaximum best =
      maximizeOverRegion(region, [&](double x, double y) {
        return std::sqrt(cMeM * x * y) + 0.5 * (region.bM * x + region.fM * y);
      });
  r.lhs = spec.T * best.value;
  r.rhs = 2.0;
  finish(r);
  if (best.empty) r.diagnostics.push_back("empty-region: C_1 is empty");
  return r;
}

TestResult lInfCondition(const SystemSpec& spec) {
  TestResult r = withExponent("lInfCondition", Exponent::infinity());
  const RegionSpec region = makeRegion(spec, Exponent::infinity());
  const double U = region.bounds.U;
  const double V = region.bounds.V;
  r.rhs = std::numbers::pi;
  if (!(U > 0.0) || !(V > 0.0)) {
    r.lhs = 0.0;
    finish(r);
    r.diagnostics.push_back("empty-region: the box (0,U] x (0,V] is empty");
    return r;
  }
  r.lhs = spec.T * (std::sqrt(region.cM * region.eM * U * V) +
                    0.5 * (region.bM * U + region.fM * V));
  finish(r);
  return r;
}

StabilityReport scanP(const SystemSpec& spec,
                      const std::vector<Exponent>& grid) {
  if (grid.empty()) throw InvalidArgument("scanP needs a non-empty p grid");
  StabilityReport report;
  report.classification = classifyBoundary(spec);
  const TestResult c18 = testCondition18(spec);
  const TestResult c19 = testCondition19(spec);
  report.uniqueness1819 = {c18.passed, c19.passed};
  report.results.push_back(c18);
  report.results.push_back(c19);

  bool anyPassed = false;
  double bestMargin = -std::numeric_limits<double>::infinity();
  for (const Exponent& p : grid) {
    for (TestResult r : {unifiedLpTest(spec, p), intertwinedTest(spec, p),
                         weakIntertwinedTest(spec, p)}) {
      anyPassed = anyPassed || r.passed;
      if (r.margin > bestMargin) {
        bestMargin = r.margin;
        report.bestP = p;
      }
      report.results.push_back(std::move(r));
    }
  }

  if (!report.classification.coexistenceExists) {
    report.conclusion = Conclusion::noCoexistence;
  } else if (c18.passed && c19.passed) {
    report.conclusion = Conclusion::globallyStableVia1819;
  } else if (anyPassed) {
    report.conclusion = Conclusion::uniqueAsymptoticallyStable;
  } else {
    report.conclusion = Conclusion::inconclusive;
  }
  return report;
}

}  // namespace lvp
