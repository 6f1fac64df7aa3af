#include "lvp/constant_case.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lvp/errors.hpp"
#include "lvp/jfunc.hpp"
#include "lvp/numerics.hpp"

namespace lvp {

const char* const kSignDiscrepancyNote =
    "signOK is false: scriptF(p)/T - k < 0, so squaring to obtain h(p) does "
    "not preserve the inequality; the G-sign pattern and the direct region "
    "test can disagree, and every p with signOK = false fails the direct "
    "test since its left side already exceeds T k > scriptF(p).";

void ConstantSystem::validate() const {
  if (!(T > 0.0)) throw ValidationError("T > 0 violated");
  if (!(b > 0.0 && c > 0.0 && e > 0.0 && f > 0.0)) {
    throw ValidationError("b, c, e, f > 0 violated");
  }
}

SystemSpec ConstantSystem::toSpec() const {
  return constantSystem(T, a, b, c, d, e, f);
}

ConstantSystem ConstantSystem::fromSpec(const SystemSpec& spec) {
  if (!spec.allConstant()) {
    throw InvalidArgument("constant-case analysis needs constant coefficients");
  }
  return {spec.T,          spec.a.offset(), spec.b.offset(), spec.c.offset(),
          spec.d.offset(), spec.e.offset(), spec.f.offset()};
}

ConstantSystem exampleOneSystem() {
  return {1.0, 2.0102, 1.0, 0.0051, 2.0203, 0.9898, 2.0};
}

Point equilibrium(const ConstantSystem& s) {
  const double det = std::fma(s.b, s.f, s.c * s.e);
  if (det == 0.0) throw SingularSystem("b f + c e = 0");
  // a f - c d and a e + b d with one rounding each.
  const double nx = std::fma(s.a, s.f, -s.c * s.d);
  const double ny = std::fma(s.a, s.e, s.b * s.d);
  return {nx / det, ny / det};
}

double kValue(const ConstantSystem& s) {
  const Point eq = equilibrium(s);
  return 0.5 * (s.b * eq.x + s.f * eq.y);
}

namespace {

RegionBounds constantBounds(const ConstantSystem& s) {
  const double U = s.a / s.b;
  return {U, s.d / s.f + s.e / s.f * U};
}

}  // namespace

HValue hOfP(const ConstantSystem& s, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("hOfP needs finite p >= 1");
  }
  HValue out;
  out.base = scriptF(Exponent::finite(p)) / s.T - kValue(s);
  out.signOK = out.base >= 0.0;
  out.h = std::pow(out.base / std::sqrt(s.c * s.e), 2.0 * p);
  return out;
}

double gOfP(const ConstantSystem& s, double p) {
  const RegionBounds uv = constantBounds(s);
  const double h = hOfP(s, p).h;
  const double ratio = s.a / s.c;
  numerics::CompensatedSum g;
  g += ratio * ratio * std::pow(uv.V, p - 1.0);
  g -= 4.0 * (s.b / s.c) * std::pow(uv.U, 1.0 - p) * h;
  return g.value();
}

double discriminant(const ConstantSystem& s, double p) {
  return std::pow(constantBounds(s).V, p - 1.0) * gOfP(s, p);
}

double quadratic24(const ConstantSystem& s, double p, double w) {
  const RegionBounds uv = constantBounds(s);
  const double lead = (s.b / s.c) * std::pow(uv.V / uv.U, p - 1.0);
  const double linear = (s.a / s.c) * std::pow(uv.V, p - 1.0);
  numerics::CompensatedSum q;
  q += -lead * w * w;
  q += linear * w;
  q -= hOfP(s, p).h;
  return q.value();
}

Quadratic24Max maxQuadratic24(const ConstantSystem& s, double p) {
  const RegionSpec region =
      makeRegion(s.toSpec(), Exponent::finite(p));
  const double U = region.bounds.U;
  const double V = region.bounds.V;
  const double xEnd = envelope(region).x;
  if (!(xEnd > 0.0)) return {0.0, 0.0, true};

  // Point of the lower_a curve above x, and whether it lies in C_p.
  auto curveY = [&](double x) {
    const double rem = std::max(0.0, s.a - s.b * U * std::pow(x / U, p));
    return V * std::pow(rem / (s.c * V), 1.0 / p);
  };
  auto onRegion = [&](double x) {
    return cpSlack(region, x, curveY(x)) >= -kMembershipTol;
  };

  constexpr std::size_t kScan = 4096;
  double lo = -1.0;
  double hi = -1.0;
  for (std::size_t i = 1; i <= kScan; ++i) {
    const double x = xEnd * static_cast<double>(i) / kScan;
    if (onRegion(x)) {
      if (lo < 0.0) lo = x;
      hi = x;
    }
  }
  auto refine = [&](double inside, double outside) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (inside + outside);
      (onRegion(mid) ? inside : outside) = mid;
    }
    return inside;
  };
  if (lo < 0.0) {
    // Thin regions can slip between scan points; fall back to the point
    // where the curve meets the slice maximum of C_p.
    const FeasibleInterval fx = feasibleX(region);
    if (fx.empty) return {0.0, 0.0, true};
    double best = fx.lo;
    double bestSlack = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= 256; ++i) {
      const double x = fx.lo + (fx.hi - fx.lo) * static_cast<double>(i) / 256;
      const double sl = cpSlack(region, x, curveY(x));
      if (sl > bestSlack) {
        bestSlack = sl;
        best = x;
      }
    }
    if (bestSlack < -kMembershipTol) return {0.0, 0.0, true};
    lo = hi = best;
  }
  const double step = xEnd / kScan;
  lo = refine(lo, std::max(0.0, lo - step));
  hi = refine(hi, std::min(xEnd, hi + step));

  const double wLo = std::pow(lo, p);
  const double wHi = std::pow(hi, p);
  // Vertex of the concave quadratic, clipped to the feasible w-range.
  const double wPeak = s.a * std::pow(U, p - 1.0) / (2.0 * s.b);
  const double w = std::clamp(wPeak, wLo, wHi);
  return {quadratic24(s, p, w), w, false};
}

Check25 check25(const ConstantSystem& s, double pStar, double pLarge) {
  if (!(pStar > 1.0) || !std::isfinite(pStar)) {
    throw InvalidArgument("pStar must lie in (1, inf)");
  }
  Check25 out;
  out.g1 = gOfP(s, 1.0);
  out.gStar = gOfP(s, pStar);
  out.gLarge = gOfP(s, pLarge);
  out.pattern = {out.g1 > 0.0, out.gStar < 0.0, out.gLarge > 0.0};
  out.signOK1 = hOfP(s, 1.0).signOK;
  out.signOKStar = hOfP(s, pStar).signOK;

  const RegionBounds uv = constantBounds(s);
  const double r = std::abs(scriptF(Exponent::infinity()) / s.T - kValue(s)) /
                   std::sqrt(s.c * s.e);
  out.limitPositive = uv.V > r * r / uv.U;
  if (out.limitPositive != out.pattern[2]) {
    out.diagnostics.push_back(
        "G(pLarge) sign disagrees with the asymptotic comparison V vs r^2/U");
  }
  out.diagnostics.push_back(std::string("signOK(1) = ") +
                            (out.signOK1 ? "true" : "false"));
  out.diagnostics.push_back("signOK(" + formatReal(pStar) + ") = " +
                            (out.signOKStar ? "true" : "false"));
  if (!out.signOK1 || !out.signOKStar) {
    out.diagnostics.push_back(kSignDiscrepancyNote);
  }
  return out;
}

ExampleOneCurve exampleOneCurve(const ConstantSystem& s,
                                const std::vector<double>& ps) {
  ExampleOneCurve out;
  out.k = kValue(s);
  for (double p : ps) {
    const HValue h = hOfP(s, p);
    out.hValues.emplace_back(p, h.h);
    out.gValues.emplace_back(p, gOfP(s, p));
    out.signPreconditionOK.emplace_back(p, h.signOK);
  }
  return out;
}

}  // namespace lvp
