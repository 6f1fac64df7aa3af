#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvp/coeffs.hpp"
#include "lvp/logistic.hpp"

namespace lvp {

/// Margins within this distance of zero are reported as borderline.
inline constexpr double kBorderline = 1e-12;

/// Trivial and semi-trivial states of the system and their stability.
struct BoundaryClassification {
  double lambda = 0.0;  ///< mean of a
  double mu = 0.0;      ///< mean of d
  std::optional<PeriodicOrbit1D> thetaLambda;  ///< prey-only state, if any
  std::optional<PeriodicOrbit1D> thetaMu;      ///< predator-only state, if any
  bool trivialStable = false;
  std::optional<bool> preyOnlyStable;
  std::optional<bool> predatorOnlyStable;
  bool coexistenceExists = false;
  /// Slack in mu > -(1/T) int e theta_lambda and lambda > (1/T) int c theta_mu.
  std::pair<double, double> margins{0.0, 0.0};
  std::vector<std::string> diagnostics;
};

struct CoexistenceVerdict {
  bool exists = false;
  std::pair<double, double> margins{0.0, 0.0};
  std::vector<std::string> diagnostics;
};

BoundaryClassification classifyBoundary(const SystemSpec& spec);

/// True iff every existing boundary state is linearly unstable.
CoexistenceVerdict coexistenceExists(const SystemSpec& spec);

}  // namespace lvp
