#include "lvp/existence.hpp"

#include <cmath>

namespace lvp {

namespace {

void flagBorderline(std::vector<std::string>& diagnostics, const char* name,
                    double margin) {
  if (std::abs(margin) <= kBorderline) {
    diagnostics.push_back(std::string("borderline: ") + name + " = " +
                          formatReal(margin));
  }
}

}  // namespace

BoundaryClassification classifyBoundary(const SystemSpec& spec) {
  BoundaryClassification out;
  out.lambda = spec.a.mean();
  out.mu = spec.d.mean();
  out.trivialStable = out.lambda <= 0.0 && out.mu <= 0.0;

  double eThetaLambda = 0.0;
  double cThetaMu = 0.0;
  if (out.lambda > 0.0) {
    out.thetaLambda = periodicLogistic(spec.a, spec.b, spec.T);
    eThetaLambda = weightedAverage(spec.e, *out.thetaLambda);
    out.preyOnlyStable = out.mu <= -eThetaLambda;
  }
  if (out.mu > 0.0) {
    out.thetaMu = periodicLogistic(spec.d, spec.f, spec.T);
    cThetaMu = weightedAverage(spec.c, *out.thetaMu);
    out.predatorOnlyStable = out.lambda <= cThetaMu;
  }

  // The first inequality only makes sense when (theta_lambda, 0) exists;
  // without it lambda <= 0 already rules coexistence out.
  const double first = out.lambda > 0.0 ? out.mu + eThetaLambda : out.lambda;
  double second = out.lambda;
  if (out.mu > 0.0) {
    second = out.lambda - cThetaMu;
  } else {
    out.diagnostics.push_back(
        "mu <= 0: predator-only state absent, second inequality replaced by "
        "lambda > 0");
  }
  if (out.lambda <= 0.0) {
    out.diagnostics.push_back("lambda <= 0: prey-only state absent");
  }
  out.margins = {first, second};
  flagBorderline(out.diagnostics, "margin mu + (1/T) int e theta_lambda",
                 first);
  flagBorderline(out.diagnostics, "margin lambda - (1/T) int c theta_mu",
                 second);
  out.coexistenceExists = out.lambda > 0.0 && first > 0.0 && second > 0.0;
  return out;
}

CoexistenceVerdict coexistenceExists(const SystemSpec& spec) {
  BoundaryClassification c = classifyBoundary(spec);
  return {c.coexistenceExists, c.margins, std::move(c.diagnostics)};
}

}  // namespace lvp
