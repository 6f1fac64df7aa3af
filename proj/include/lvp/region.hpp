#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lvp/coeffs.hpp"
#include "lvp/exponent.hpp"

namespace lvp {

/// Slack below which a point still counts as inside the region.
inline constexpr double kMembershipTol = 1e-12;
/// Maximum |residual| of an emitted boundary sample.
inline constexpr double kBoundaryTol = 1e-9;

/// A-priori sup-norm bounds of every coexistence state:
/// U = max a/b,  V = max d/f + (max e/f) U.
struct RegionBounds {
  double U = 0.0;
  double V = 0.0;
};

/// Parameters of the region C_p of possible L^p-average pairs:
///   bL U^{1-p} x^p + cL V^{1-p} y^p <= abar <= bM x + cM y
///   -eM x + fL V^{1-p} y^p <= dbar <= -eL U^{1-p} x^p + fM y
/// with x, y > 0 (finite p), or the box 0 < x <= U, 0 < y <= V (p = inf).
struct RegionSpec {
  Exponent p = Exponent::finite(1.0);
  double abar = 0.0;
  double dbar = 0.0;
  double bL = 1.0, bM = 1.0;
  double cL = 1.0, cM = 1.0;
  double eL = 1.0, eM = 1.0;
  double fL = 1.0, fM = 1.0;
  RegionBounds bounds;

  /// Same parameters with another exponent.
  RegionSpec withExponent(const Exponent& exponent) const;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Result of a maximization over C_p. An empty region is a state, not an
/// error: value is 0 and `empty` is set.
struct RegionMaximum {
  double value = 0.0;
  Point argmax;
  bool empty = false;
};

/// Closed interval of x admitting a feasible y, if any.
struct FeasibleInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
};

/// Admissible y-range at a given x; lo > hi means no admissible y.
struct Slice {
  double lo = 0.0;
  double hi = 0.0;
};

RegionBounds computeUV(const SystemSpec& spec);

/// Region parameters for a system: averages of a, d and extrema of b, c, e, f.
RegionSpec makeRegion(const SystemSpec& spec, const Exponent& p);

/// Smallest slack among the defining inequalities (x > 0 and y > 0 count as
/// slacks x and y). Non-negative iff the point is in C_p.
double cpSlack(const RegionSpec& region, double x, double y);

/// Membership with boundary points (slack >= -1e-12) counted as inside.
bool cpContains(const RegionSpec& region, double x, double y);

/// Closed-form y-interval at x from the four constraints (finite p).
Slice slice(const RegionSpec& region, double x);

/// The set of x with a non-empty slice.
FeasibleInterval feasibleX(const RegionSpec& region);

/// Analytic envelope: every point of C_p has x <= xmax and y <= ymax.
Point envelope(const RegionSpec& region);

/// Maximizes objective(x, y) over C_p for objectives non-decreasing in y and
/// concave along the upper boundary (x y, positive linear forms, and sums of
/// their square roots qualify).
RegionMaximum maximizeOverRegion(
    const RegionSpec& region,
    const std::function<double(double, double)>& objective);

/// sup { x y : (x, y) in C_p }; exactly U V for p = inf.
RegionMaximum supXY(const RegionSpec& region);

/// sup { wx x + wy y : (x, y) in C_p } for wx, wy >= 0.
RegionMaximum supLinear(const RegionSpec& region, double wx, double wy);

/// sup { bM x + fM y : (x, y) in C_1 }. Throws InvalidArgument unless the
/// region has p = 1.
RegionMaximum supLinearC1(const RegionSpec& region1, double bM, double fM);

struct BoundaryPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
  double residual = 0.0;
};

struct BoundarySamples {
  std::vector<BoundaryPoint> points;
  bool empty = false;
};

/// n samples on each boundary curve of C_p: labels lower_a, upper_a,
/// lower_d, upper_d (finite p) or box_x, box_y (p = inf). Curves are sampled
/// over the positive quadrant up to the region's x-envelope.
BoundarySamples boundaryPoints(const RegionSpec& region, std::size_t n);

}  // namespace lvp
