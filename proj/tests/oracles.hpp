// Independent reference computations used only by the tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lvp/region.hpp"

namespace oracle {

// K(m) = pi / (2 AGM(1, sqrt(1 - m))).
inline double ellipticK(double m) {
  double a = 1.0;
  double g = std::sqrt(1.0 - m);
  for (int i = 0; i < 60 && std::abs(a - g) > 1e-16 * a; ++i) {
    const double next = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = next;
  }
  return std::numbers::pi / (2.0 * a);
}

// Direct transcription of the four region inequalities with naive powers.
struct Constraints {
  double abar, dbar, bL, bM, cL, cM, eL, eM, fL, fM, U, V, p;

  static Constraints from(const lvp::RegionSpec& r) {
    return {r.abar, r.dbar, r.bL, r.bM, r.cL, r.cM, r.eL,
            r.eM,   r.fL,   r.fM, r.bounds.U, r.bounds.V, r.p.value()};
  }

  double px(double x) const { return std::pow(U, 1.0 - p) * std::pow(x, p); }
  double py(double y) const { return std::pow(V, 1.0 - p) * std::pow(y, p); }

  bool inside(double x, double y) const {
    if (!(x > 0.0 && y > 0.0)) return false;
    return bL * px(x) + cL * py(y) <= abar && abar <= bM * x + cM * y &&
           -eM * x + fL * py(y) <= dbar && dbar <= -eL * px(x) + fM * y;
  }
};

struct Box {
  double xlo, xhi, ylo, yhi;
};

// Shrink [0, xmax] x [0, ymax] by repeatedly solving each inequality for one
// variable at the worst corner of the current box.
inline Box envelopeBox(const Constraints& c) {
  const double p = c.p;
  auto rootX = [&](double rhs) {
    return rhs <= 0.0 ? 0.0 : std::pow(std::pow(c.U, p - 1.0) * rhs, 1.0 / p);
  };
  auto rootY = [&](double rhs) {
    return rhs <= 0.0 ? 0.0 : std::pow(std::pow(c.V, p - 1.0) * rhs, 1.0 / p);
  };
  Box b{0.0, rootX(c.abar / c.bL), 0.0, rootY(c.abar / c.cL)};
  for (int it = 0; it < 200; ++it) {
    const Box old = b;
    b.xhi = std::min(b.xhi, rootX((c.abar - c.cL * c.py(b.ylo)) / c.bL));
    b.yhi = std::min(b.yhi, rootY((c.abar - c.bL * c.px(b.xlo)) / c.cL));
    b.yhi = std::min(b.yhi, rootY((c.dbar + c.eM * b.xhi) / c.fL));
    b.xhi = std::min(b.xhi, rootX((c.fM * b.yhi - c.dbar) / c.eL));
    b.xlo = std::max(b.xlo, (c.abar - c.cM * b.yhi) / c.bM);
    b.ylo = std::max(b.ylo, (c.abar - c.bM * b.xhi) / c.cM);
    b.ylo = std::max(b.ylo, (c.dbar + c.eL * c.px(b.xlo)) / c.fM);
    b.xlo = std::max(b.xlo, (c.fL * c.py(b.ylo) - c.dbar) / c.eM);
    if (old.xlo == b.xlo && old.xhi == b.xhi && old.ylo == b.ylo &&
        old.yhi == b.yhi) {
      break;
    }
  }
  return b;
}

struct GridMax {
  double value = 0.0;
  double x = 0.0, y = 0.0;
  long hits = 0;
};

// Exhaustive n x n scan of `box` for max x*y among interior grid points.
inline GridMax bruteForceXY(const Constraints& c, const Box& box, int n) {
  GridMax best;
  for (int i = 0; i < n; ++i) {
    const double x = box.xlo + (box.xhi - box.xlo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = box.ylo + (box.yhi - box.ylo) * j / (n - 1);
      if (!c.inside(x, y)) continue;
      ++best.hits;
      if (x * y > best.value) best = {x * y, x, y, best.hits};
    }
  }
  return best;
}

}  // namespace oracle
