#include "lvp/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lvp/errors.hpp"
#include "lvp/numerics.hpp"

namespace lvp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kSliceGrid = 512;
constexpr std::size_t kObjectiveGrid = 64;

// scale^(1-p) * value^p, evaluated without overflow for large p.
double scaledPower(double value, double scale, double p) {
  return scale * std::pow(value / scale, p);
}

// Inverse of scaledPower: the v >= 0 with coef * scale^(1-p) v^p = rem.
double scaledRoot(double rem, double coef, double scale, double p) {
  return scale * std::pow(rem / (coef * scale), 1.0 / p);
}

bool degenerate(const RegionSpec& r) {
  return !(r.bounds.U > 0.0) || !(r.bounds.V > 0.0);
}

// x-range on which both upper curves are defined.
std::pair<double, double> sliceDomain(const RegionSpec& r) {
  const double p = r.p.value();
  const double lo = std::max(0.0, -r.dbar / r.eM);
  const double hi =
      r.abar > 0.0 ? scaledRoot(r.abar, r.bL, r.bounds.U, p) : -kInf;
  return {lo, hi};
}

double sliceWidth(const RegionSpec& r, double x) {
  const Slice s = slice(r, x);
  return s.hi - s.lo;
}

// Locates the maximum of a concave function on [lo, hi]: grid then golden.
std::pair<double, double> gridGolden(const std::function<double(double)>& f,
                                     double lo, double hi, std::size_t grid) {
  if (hi <= lo) return {lo, f(lo)};
  const double h = (hi - lo) / static_cast<double>(grid);
  std::size_t best = 0;
  double bestValue = -kInf;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double v = f(lo + h * static_cast<double>(i));
    // Strict comparison keeps the smallest x on ties.
    if (v > bestValue) {
      bestValue = v;
      best = i;
    }
  }
  const double a = lo + h * static_cast<double>(best == 0 ? 0 : best - 1);
  const double b = lo + h * static_cast<double>(std::min(best + 1, grid));
  const double xTol = 1e-15 * std::max(1.0, std::abs(hi));
  auto refined = numerics::goldenMaximize(f, a, b, xTol);
  if (refined.second < bestValue) {
    return {lo + h * static_cast<double>(best), bestValue};
  }
  return refined;
}

// Boundary of the concave sliceWidth superlevel set between a point where
// it fails (bad) and one where it holds (good).
double bisectEdge(const RegionSpec& r, double bad, double good) {
  for (int i = 0; i < 200 && std::abs(good - bad) > 1e-16 * std::abs(good);
       ++i) {
    const double mid = 0.5 * (bad + good);
    if (sliceWidth(r, mid) >= -kMembershipTol) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace

RegionSpec RegionSpec::withExponent(const Exponent& exponent) const {
  RegionSpec copy = *this;
  copy.p = exponent;
  return copy;
}

RegionBounds computeUV(const SystemSpec& spec) {
  const double U = ratioExtrema(spec.a, spec.b, spec.T).second;
  const double dOverF = ratioExtrema(spec.d, spec.f, spec.T).second;
  const double eOverF = ratioExtrema(spec.e, spec.f, spec.T).second;
  return {U, dOverF + eOverF * U};
}

RegionSpec makeRegion(const SystemSpec& spec, const Exponent& p) {
  RegionSpec r;
  r.p = p;
  r.abar = spec.a.mean();
  r.dbar = spec.d.mean();
  const CoeffStats b = stats(spec.b, spec.T);
  const CoeffStats c = stats(spec.c, spec.T);
  const CoeffStats e = stats(spec.e, spec.T);
  const CoeffStats f = stats(spec.f, spec.T);
  r.bL = b.phiL;
  r.bM = b.phiM;
  r.cL = c.phiL;
  r.cM = c.phiM;
  r.eL = e.phiL;
  r.eM = e.phiM;
  r.fL = f.phiL;
  r.fM = f.phiM;
  r.bounds = computeUV(spec);
  return r;
}

double cpSlack(const RegionSpec& r, double x, double y) {
  const double U = r.bounds.U;
  const double V = r.bounds.V;
  if (r.p.isInfinite()) return std::min({x, y, U - x, V - y});
  if (degenerate(r)) return -kInf;
  const double p = r.p.value();
  const double xp = x > 0.0 ? scaledPower(x, U, p) : 0.0;
  const double yp = y > 0.0 ? scaledPower(y, V, p) : 0.0;
  const double s1 = r.abar - (r.bL * xp + r.cL * yp);
  const double s2 = r.bM * x + r.cM * y - r.abar;
  const double s3 = r.dbar - (-r.eM * x + r.fL * yp);
  const double s4 = -r.eL * xp + r.fM * y - r.dbar;
  return std::min({x, y, s1, s2, s3, s4});
}

bool cpContains(const RegionSpec& r, double x, double y) {
  return x > 0.0 && y > 0.0 && cpSlack(r, x, y) >= -kMembershipTol;
}

Slice slice(const RegionSpec& r, double x) {
  const double U = r.bounds.U;
  const double V = r.bounds.V;
  if (r.p.isInfinite()) {
    if (x < 0.0 || x > U || !(V > 0.0)) return {1.0, 0.0};
    return {0.0, V};
  }
  if (degenerate(r)) return {1.0, 0.0};
  const double p = r.p.value();
  const double xp = scaledPower(std::max(x, 0.0), U, p);
  const double rem1 = r.abar - r.bL * xp;
  const double rem3 = r.dbar + r.eM * x;
  const double hi1 = rem1 >= 0.0 ? scaledRoot(rem1, r.cL, V, p) : -kInf;
  const double hi3 = rem3 >= 0.0 ? scaledRoot(rem3, r.fL, V, p) : -kInf;
  const double lo2 = (r.abar - r.bM * x) / r.cM;
  const double lo4 = (r.dbar + r.eL * xp) / r.fM;
  return {std::max({0.0, lo2, lo4}), std::min(hi1, hi3)};
}

FeasibleInterval feasibleX(const RegionSpec& r) {
  if (r.p.isInfinite()) {
    if (degenerate(r)) return {};
    return {0.0, r.bounds.U, false};
  }
  if (degenerate(r) || !(r.abar > 0.0)) return {};
  const auto [domLo, domHi] = sliceDomain(r);
  if (!(domHi >= domLo)) return {};
  const auto [xBest, width] = gridGolden(
      [&](double x) { return sliceWidth(r, x); }, domLo, domHi, kSliceGrid);
  if (width < -kMembershipTol) return {};
  FeasibleInterval out;
  out.empty = false;
  out.lo = sliceWidth(r, domLo) >= -kMembershipTol ? domLo
                                                   : bisectEdge(r, domLo, xBest);
  out.hi = sliceWidth(r, domHi) >= -kMembershipTol ? domHi
                                                   : bisectEdge(r, domHi, xBest);
  return out;
}

Point envelope(const RegionSpec& r) {
  const double U = r.bounds.U;
  const double V = r.bounds.V;
  if (r.p.isInfinite()) return {U, V};
  if (degenerate(r) || !(r.abar > 0.0)) return {0.0, 0.0};
  const double p = r.p.value();
  return {scaledRoot(r.abar, r.bL, U, p), scaledRoot(r.abar, r.cL, V, p)};
}

RegionMaximum maximizeOverRegion(
    const RegionSpec& r,
    const std::function<double(double, double)>& objective) {
  const FeasibleInterval range = feasibleX(r);
  if (range.empty) return {0.0, {}, true};
  auto alongTop = [&](double x) {
    return objective(x, r.p.isInfinite() ? r.bounds.V : slice(r, x).hi);
  };
  const auto [x, value] = gridGolden(alongTop, range.lo, range.hi,
                                     kObjectiveGrid);
  const double y = r.p.isInfinite() ? r.bounds.V : slice(r, x).hi;
  return {value, {x, y}, false};
}

RegionMaximum supXY(const RegionSpec& r) {
  if (r.p.isInfinite()) {
    if (degenerate(r)) return {0.0, {}, true};
    return {r.bounds.U * r.bounds.V, {r.bounds.U, r.bounds.V}, false};
  }
  return maximizeOverRegion(r, [](double x, double y) { return x * y; });
}

RegionMaximum supLinear(const RegionSpec& r, double wx, double wy) {
  if (wx < 0.0 || wy < 0.0) {
    throw InvalidArgument("supLinear needs non-negative weights");
  }
  if (r.p.isInfinite()) {
    if (degenerate(r)) return {0.0, {}, true};
    return {wx * r.bounds.U + wy * r.bounds.V, {r.bounds.U, r.bounds.V},
            false};
  }
  return maximizeOverRegion(
      r, [wx, wy](double x, double y) { return wx * x + wy * y; });
}

RegionMaximum supLinearC1(const RegionSpec& region1, double bM, double fM) {
  if (region1.p.isInfinite() || region1.p.value() != 1.0) {
    throw InvalidArgument("supLinearC1 requires the p = 1 region");
  }
  return supLinear(region1, bM, fM);
}

BoundarySamples boundaryPoints(const RegionSpec& r, std::size_t n) {
  if (n < 2) throw InvalidArgument("need at least 2 samples per curve");
  BoundarySamples out;
  out.empty = feasibleX(r).empty;
  const double U = r.bounds.U;
  const double V = r.bounds.V;
  auto sampleX = [n](double lo, double hi, std::size_t j) {
    return lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1);
  };
  auto push = [&](const char* label, double x, double y, double residual) {
    out.points.push_back({label, x, y, residual});
  };

  if (r.p.isInfinite()) {
    if (degenerate(r)) return out;
    for (std::size_t j = 0; j < n; ++j) {
      const double y = sampleX(0.0, V, j);
      push("box_x", U, y, 0.0);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double x = sampleX(0.0, U, j);
      push("box_y", x, V, 0.0);
    }
    return out;
  }
  if (degenerate(r) || !(r.abar > 0.0)) return out;

  const double p = r.p.value();
  const double window = envelope(r).x;

  for (std::size_t j = 0; j < n; ++j) {
    const double x = sampleX(0.0, window, j);
    const double rem = std::max(0.0, r.abar - r.bL * scaledPower(x, U, p));
    const double y = scaledRoot(rem, r.cL, V, p);
    const double residual = r.bL * scaledPower(x, U, p) +
                            r.cL * scaledPower(y, V, p) - r.abar;
    push("lower_a", x, y, residual);
  }

  const double upperAEnd = std::min(window, r.abar / r.bM);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = sampleX(0.0, upperAEnd, j);
    const double y = (r.abar - r.bM * x) / r.cM;
    push("upper_a", x, y, r.bM * x + r.cM * y - r.abar);
  }

  const double lowerDStart = std::max(0.0, -r.dbar / r.eM);
  if (lowerDStart < window) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = sampleX(lowerDStart, window, j);
      const double y =
          scaledRoot(std::max(0.0, r.dbar + r.eM * x), r.fL, V, p);
      push("lower_d", x, y,
           -r.eM * x + r.fL * scaledPower(y, V, p) - r.dbar);
    }
  }

  const double upperDStart =
      r.dbar >= 0.0 ? 0.0 : scaledRoot(-r.dbar, r.eL, U, p);
  if (upperDStart < window) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = sampleX(upperDStart, window, j);
      const double y = (r.dbar + r.eL * scaledPower(x, U, p)) / r.fM;
      push("upper_d", x, y,
           -r.eL * scaledPower(x, U, p) + r.fM * y - r.dbar);
    }
  }
  return out;
}

}  // namespace lvp
