#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvp/coeffs.hpp"
#include "lvp/region.hpp"

namespace lvp {

/// Constant-coefficient system u' = u (a - b u - c v), v' = v (d + e u - f v).
struct ConstantSystem {
  double T = 1.0;
  double a = 0.0, b = 1.0, c = 1.0, d = 0.0, e = 1.0, f = 1.0;

  /// Throws ValidationError unless T > 0 and b, c, e, f > 0.
  void validate() const;
  SystemSpec toSpec() const;
  /// Throws InvalidArgument if any coefficient of spec is not constant.
  static ConstantSystem fromSpec(const SystemSpec& spec);
};

/// The worked example: T = 1, a = 2.0102, b = 1, c = 0.0051, d = 2.0203,
/// e = 0.9898, f = 2.
ConstantSystem exampleOneSystem();

/// Solution of [b c; -e f] (x, y) = (a, d): the single point of C_1 and,
/// when positive, the coexistence equilibrium. Throws SingularSystem if
/// b f + c e == 0.
Point equilibrium(const ConstantSystem& sys);

/// k = (b x1 + f y1)/2 at the equilibrium.
double kValue(const ConstantSystem& sys);

struct HValue {
  double h = 0.0;
  /// scriptF(p)/T - k >= 0: the squaring step behind h preserved the
  /// inequality direction.
  bool signOK = false;
  double base = 0.0;  ///< scriptF(p)/T - k
};

/// h(p) = [ (scriptF(p)/T - k) / sqrt(c e) ]^{2p}.
HValue hOfP(const ConstantSystem& sys, double p);

/// G(p) = (a/c)^2 V^{p-1} - 4 (b/c) U^{1-p} h(p), compensated.
double gOfP(const ConstantSystem& sys, double p);

/// Delta(p) = V^{p-1} G(p).
double discriminant(const ConstantSystem& sys, double p);

/// Concave quadratic in w = x^p obtained by substituting the lower_a
/// boundary into x^p y^p <= h(p):
///   -(b/c)(V/U)^{p-1} w^2 + (a/c) V^{p-1} w - h(p).
double quadratic24(const ConstantSystem& sys, double p, double w);

struct Quadratic24Max {
  double value = 0.0;
  double w = 0.0;
  bool empty = false;
};

/// Maximum of quadratic24 over the w = x^p for which the lower_a boundary
/// point (x, y) lies in C_p.
Quadratic24Max maxQuadratic24(const ConstantSystem& sys, double p);

struct Check25 {
  std::array<bool, 3> pattern{false, false, false};  ///< G(1)>0, G(p*)<0, G(pLarge)>0
  double g1 = 0.0;
  double gStar = 0.0;
  double gLarge = 0.0;
  bool signOK1 = false;
  bool signOKStar = false;
  /// V > r^2/U with r = |scriptF(inf)/T - k| / sqrt(c e): decides the sign
  /// of G as p -> inf.
  bool limitPositive = false;
  std::vector<std::string> diagnostics;
};

/// Sign pattern G(1) > 0, G(pStar) < 0, lim G > 0 (pLarge as surrogate).
Check25 check25(const ConstantSystem& sys, double pStar, double pLarge = 200.0);

/// Sampled h, G and sign flags over a p list, for reporting.
struct ExampleOneCurve {
  double k = 0.0;
  std::vector<std::pair<double, double>> hValues;
  std::vector<std::pair<double, double>> gValues;
  std::vector<std::pair<double, bool>> signPreconditionOK;
};

ExampleOneCurve exampleOneCurve(const ConstantSystem& sys,
                                const std::vector<double>& ps);

/// Note attached to reports when the sign pattern and the direct region
/// test disagree because the squaring step was not sign-preserving.
extern const char* const kSignDiscrepancyNote;

}  // namespace lvp
