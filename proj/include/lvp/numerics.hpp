#pragma once

// Small numerical kernels shared by the analysis modules: Gauss-Legendre
// panels, adaptive Simpson, golden-section search, compensated summation
// and cubic Hermite interpolation.

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace lvp::numerics {

/// Nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, computed by Newton iteration on P_n.
GaussRule gaussLegendre(std::size_t n);

/// The 8-point rule used by all composite quadratures (cached).
const GaussRule& gauss8();

/// Composite Gauss-Legendre over `panels` equal panels of [lo, hi].
template <typename F>
double compositeGauss(F&& f, double lo, double hi, std::size_t panels) {
  const GaussRule& rule = gauss8();
  const double width = (hi - lo) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double mid = lo + (static_cast<double>(i) + 0.5) * width;
    double panel = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      panel += rule.weights[j] * f(mid + 0.5 * width * rule.nodes[j]);
    }
    total += 0.5 * width * panel;
  }
  return total;
}

struct QuadratureResult {
  double value = 0.0;
  double errorEstimate = 0.0;
  std::size_t panels = 0;
};

/// Composite Gauss with panel doubling until two successive results agree
/// within `tol` (absolute) or `maxPanels` is reached.
template <typename F>
QuadratureResult refinedGauss(F&& f, double lo, double hi, double tol,
                              std::size_t panels = 64,
                              std::size_t maxPanels = 1 << 14) {
  double coarse = compositeGauss(f, lo, hi, panels);
  for (;;) {
    const std::size_t finer = panels * 2;
    const double fine = compositeGauss(f, lo, hi, finer);
    const double err = std::abs(fine - coarse);
    if (err <= tol || finer >= maxPanels) return {fine, err, finer};
    coarse = fine;
    panels = finer;
  }
}

namespace detail {

template <typename F>
double simpsonStep(F& f, double a, double fa, double b, double fb, double m,
                   double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpsonStep(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpsonStep(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson with Richardson correction; recursion capped at maxDepth.
template <typename F>
double adaptiveSimpson(F&& f, double a, double b, double tol,
                       int maxDepth = 30) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpsonStep(f, a, fa, b, fb, m, fm, whole, tol, maxDepth);
}

/// Golden-section search for a maximum of a unimodal function on [lo, hi].
/// Returns (argmax, max). Stops when the bracket is below `xTol`.
template <typename F>
std::pair<double, double> goldenMaximize(F&& f, double lo, double hi,
                                         double xTol, int maxIter = 200) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < maxIter && hi - lo > xTol; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  // Endpoints are candidates too: the maximum may sit on the bracket edge.
  double bestX = f1 >= f2 ? x1 : x2;
  double bestF = std::max(f1, f2);
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > bestF) {
      bestF = fx;
      bestX = x;
    }
  }
  return {bestX, bestF};
}

/// Neumaier's compensated summation.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator-=(double term) { return *this += -term; }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Cubic Hermite interpolation on [t0, t0 + h] at local time s in [0, h].
inline double hermite(double y0, double dy0, double y1, double dy1, double h,
                      double s) {
  const double x = s / h;
  const double x2 = x * x;
  const double x3 = x2 * x;
  return (2 * x3 - 3 * x2 + 1) * y0 + (x3 - 2 * x2 + x) * h * dy0 +
         (-2 * x3 + 3 * x2) * y1 + (x3 - x2) * h * dy1;
}

/// Sum of a span using compensated summation.
inline double compensatedTotal(std::span<const double> terms) {
  CompensatedSum sum;
  for (double t : terms) sum += t;
  return sum.value();
}

}  // namespace lvp::numerics
