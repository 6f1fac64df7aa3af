#include "lvp/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <optional>
#include <random>

#include "lvp/errors.hpp"
#include "lvp/numerics.hpp"
#include "lvp/region.hpp"

namespace lvp {

State2 lotkaVolterraField(const SystemSpec& s, double t, const State2& y) {
  const double T = s.T;
  const double u = y[0];
  const double v = y[1];
  return {u * (s.a(t, T) - s.b(t, T) * u - s.c(t, T) * v),
          v * (s.d(t, T) + s.e(t, T) * u - s.f(t, T) * v)};
}

Matrix2 lotkaVolterraJacobian(const SystemSpec& s, double t, const State2& y) {
  const double T = s.T;
  const double u = y[0];
  const double v = y[1];
  const double a = s.a(t, T), b = s.b(t, T), c = s.c(t, T);
  const double d = s.d(t, T), e = s.e(t, T), f = s.f(t, T);
  return {{{a - 2.0 * b * u - c * v, -c * u},
           {e * v, d + e * u - 2.0 * f * v}}};
}

namespace {

// Relative (log) residual a converged iterate must also meet; it rejects
// points that only look periodic because a component is nearly zero.
constexpr double kNewtonLogGuard = 1e-6;

void requirePositive(const State2& s) {
  if (!(s[0] > 0.0) || !(s[1] > 0.0)) {
    throw InvalidArgument("state must lie in the open positive quadrant");
  }
}

double maxNorm(const State2& a, const State2& b) {
  return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

}  // namespace

Trajectory integrate(const SystemSpec& spec, const State2& state0, double t0,
                     double t1, const OdeOptions& opts) {
  requirePositive(state0);
  Trajectory out;
  auto observer = [&out](double t, const State2& y) {
    out.t.push_back(t);
    out.y.push_back(y);
  };
  dormandPrince<2>(
      [&spec](double t, const State2& y) {
        return lotkaVolterraField(spec, t, y);
      },
      state0, t0, t1, opts, spec.T, &observer);
  return out;
}

State2 poincareMap(const SystemSpec& spec, const State2& state0,
                   const OdeOptions& opts) {
  requirePositive(state0);
  return dormandPrince<2>(
      [&spec](double t, const State2& y) {
        return lotkaVolterraField(spec, t, y);
      },
      state0, 0.0, spec.T, opts, spec.T);
}

State2 PeriodicOrbit2D::operator()(double time) const {
  const double phase = time / T - std::floor(time / T);
  const double h = T / static_cast<double>(intervals());
  const double scaled = phase * static_cast<double>(intervals());
  std::size_t i = std::min(static_cast<std::size_t>(scaled), intervals() - 1);
  const double s = (scaled - static_cast<double>(i)) * h;
  return {numerics::hermite(u[i], du[i], u[i + 1], du[i + 1], h, s),
          numerics::hermite(v[i], dv[i], v[i + 1], dv[i + 1], h, s)};
}

State2 PeriodicOrbit2D::maxima() const {
  return {*std::max_element(u.begin(), u.end()),
          *std::max_element(v.begin(), v.end())};
}

State2 PeriodicOrbit2D::minima() const {
  return {*std::min_element(u.begin(), u.end()),
          *std::min_element(v.begin(), v.end())};
}

PeriodicOrbit2D sampleOrbit(const SystemSpec& spec, const State2& start,
                            std::size_t samples, const OdeOptions& opts) {
  requirePositive(start);
  if (samples < 2) throw InvalidArgument("need at least 2 orbit samples");
  PeriodicOrbit2D orbit;
  orbit.T = spec.T;
  auto field = [&spec](double t, const State2& y) {
    return lotkaVolterraField(spec, t, y);
  };
  State2 y = start;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double t = spec.T * static_cast<double>(i) /
                     static_cast<double>(samples);
    if (i > 0) {
      const double tPrev = spec.T * static_cast<double>(i - 1) /
                           static_cast<double>(samples);
      y = dormandPrince<2>(field, y, tPrev, t, opts, spec.T);
    }
    if (!(y[0] > 0.0) || !(y[1] > 0.0)) {
      throw NonPositive("orbit left the positive quadrant");
    }
    const State2 dy = field(t, y);
    orbit.t.push_back(t);
    orbit.u.push_back(y[0]);
    orbit.v.push_back(y[1]);
    orbit.du.push_back(dy[0]);
    orbit.dv.push_back(dy[1]);
  }
  orbit.periodicityResidual = maxNorm(start, {orbit.u.back(), orbit.v.back()});
  return orbit;
}

PeriodicOrbit2D findCoexistence(const SystemSpec& spec, const State2& guess,
                                const NewtonOptions& opts) {
  requirePositive(guess);
  // Newton runs on z = log x, G(z) = log P(e^z) - z. Boundary states sit at
  // z = -inf, so iterates cannot settle onto them the way they can when the
  // absolute residual P(x) - x is driven to zero near an axis.
  struct Eval {
    State2 x;
    State2 absRes;
    State2 logRes;
  };
  auto evaluate = [&](const State2& z) {
    const State2 x{std::exp(z[0]), std::exp(z[1])};
    const State2 px = poincareMap(spec, x, opts.ode);
    if (!(px[0] > 0.0) || !(px[1] > 0.0)) {
      throw NonPositive("period map left the open quadrant");
    }
    return Eval{x,
                {px[0] - x[0], px[1] - x[1]},
                {std::log(px[0]) - z[0], std::log(px[1]) - z[1]}};
  };
  auto size = [](const State2& r) {
    return std::max(std::abs(r[0]), std::abs(r[1]));
  };

  State2 z{std::log(guess[0]), std::log(guess[1])};
  Eval cur = evaluate(z);
  for (int iter = 0; iter <= opts.maxIterations; ++iter) {
    if (size(cur.absRes) <= opts.tolerance &&
        size(cur.logRes) <= kNewtonLogGuard) {
      PeriodicOrbit2D orbit = sampleOrbit(spec, cur.x, opts.samples, opts.ode);
      orbit.newtonResidual = size(cur.absRes);
      orbit.iterations = iter;
      return orbit;
    }
    if (iter == opts.maxIterations) break;

    // Forward-difference Jacobian of G.
    Matrix2 jac{};
    for (int k = 0; k < 2; ++k) {
      State2 shifted = z;
      const double step = opts.fdStep * (1.0 + std::abs(z[k]));
      shifted[k] += step;
      const Eval es = evaluate(shifted);
      jac[0][k] = (es.logRes[0] - cur.logRes[0]) / step;
      jac[1][k] = (es.logRes[1] - cur.logRes[1]) / step;
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    if (det == 0.0 || !std::isfinite(det)) {
      throw NoConvergence("singular Newton matrix at iteration " +
                          std::to_string(iter));
    }
    const State2& g = cur.logRes;
    const State2 delta{-(jac[1][1] * g[0] - jac[0][1] * g[1]) / det,
                       -(-jac[1][0] * g[0] + jac[0][0] * g[1]) / det};

    double damping = 1.0;
    bool accepted = false;
    State2 fallbackZ{};
    Eval fallback{};
    bool haveFallback = false;
    for (int halving = 0; halving < 30; ++halving, damping *= 0.5) {
      const State2 trial{z[0] + damping * delta[0], z[1] + damping * delta[1]};
      Eval et;
      try {
        et = evaluate(trial);
      } catch (const Error&) {
        continue;
      }
      if (size(et.logRes) < size(cur.logRes)) {
        z = trial;
        cur = et;
        accepted = true;
        break;
      }
      if (!haveFallback) {
        fallbackZ = trial;
        fallback = et;
        haveFallback = true;
      }
    }
    if (!accepted) {
      if (!haveFallback) {
        throw NonPositive("Newton iterate left the open quadrant");
      }
      z = fallbackZ;
      cur = fallback;
    }
  }
  throw NoConvergence("Newton did not converge in " +
                      std::to_string(opts.maxIterations) +
                      " iterations (residual " + formatReal(size(cur.absRes)) +
                      ")");
}

std::string toString(FloquetClass c) {
  switch (c) {
    case FloquetClass::asymptoticallyStable:
      return "asymptoticallyStable";
    case FloquetClass::linearlyStableNonstrict:
      return "linearlyStableNonstrict";
    case FloquetClass::unstable:
      return "unstable";
  }
  return "unknown";
}

std::array<std::complex<double>, 2> eigenvalues(const Matrix2& m) {
  const double tr = m[0][0] + m[1][1];
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = tr * tr - 4.0 * det;
  if (disc >= 0.0) {
    // Stable form: the larger-magnitude root first, the other from det.
    const double root = std::sqrt(disc);
    const double big = 0.5 * (tr + std::copysign(root, tr));
    const double small = big != 0.0 ? det / big : 0.0;
    return {std::complex<double>(big), std::complex<double>(small)};
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {std::complex<double>(0.5 * tr, im),
          std::complex<double>(0.5 * tr, -im)};
}

FloquetClass classifyMultipliers(
    const std::array<std::complex<double>, 2>& multipliers, double tol) {
  const double m0 = std::abs(multipliers[0]);
  const double m1 = std::abs(multipliers[1]);
  if (m0 < 1.0 - tol && m1 < 1.0 - tol) {
    return FloquetClass::asymptoticallyStable;
  }
  if (m0 <= 1.0 + tol && m1 <= 1.0 + tol) {
    return FloquetClass::linearlyStableNonstrict;
  }
  return FloquetClass::unstable;
}

FloquetData floquet(const SystemSpec& spec, const PeriodicOrbit2D& orbit,
                    const OdeOptions& opts) {
  using Extended = OdeState<6>;
  auto field = [&spec](double t, const Extended& z) {
    const State2 y{z[0], z[1]};
    const State2 dy = lotkaVolterraField(spec, t, y);
    const Matrix2 j = lotkaVolterraJacobian(spec, t, y);
    // z[2..5] holds the fundamental matrix row-major.
    Extended out{};
    out[0] = dy[0];
    out[1] = dy[1];
    out[2] = j[0][0] * z[2] + j[0][1] * z[4];
    out[3] = j[0][0] * z[3] + j[0][1] * z[5];
    out[4] = j[1][0] * z[2] + j[1][1] * z[4];
    out[5] = j[1][0] * z[3] + j[1][1] * z[5];
    return out;
  };
  const State2 start = orbit.start();
  const Extended end = dormandPrince<6>(
      field, Extended{start[0], start[1], 1.0, 0.0, 0.0, 1.0}, 0.0, spec.T,
      opts, spec.T);
  FloquetData data;
  data.monodromy = {{{end[2], end[3]}, {end[4], end[5]}}};
  data.multipliers = eigenvalues(data.monodromy);
  data.classification = classifyMultipliers(data.multipliers);
  return data;
}

namespace {

// Integral over [0, T] of g(t, state) along the Hermite-interpolated orbit.
template <typename G>
double orbitIntegral(const PeriodicOrbit2D& orbit, G&& g) {
  const auto& rule = numerics::gauss8();
  const double h = orbit.T / static_cast<double>(orbit.intervals());
  numerics::CompensatedSum total;
  for (std::size_t i = 0; i < orbit.intervals(); ++i) {
    double panel = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double s = 0.5 * h * (1.0 + rule.nodes[j]);
      const State2 y{
          numerics::hermite(orbit.u[i], orbit.du[i], orbit.u[i + 1],
                            orbit.du[i + 1], h, s),
          numerics::hermite(orbit.v[i], orbit.dv[i], orbit.v[i + 1],
                            orbit.dv[i + 1], h, s)};
      panel += rule.weights[j] * g(orbit.t[i] + s, y);
    }
    total += 0.5 * h * panel;
  }
  return total.value();
}

// Maximum of one component of the interpolated orbit.
double orbitMax(const PeriodicOrbit2D& orbit, int component) {
  const std::vector<double>& values = component == 0 ? orbit.u : orbit.v;
  const auto best = std::max_element(values.begin(), values.end());
  const std::size_t i = static_cast<std::size_t>(best - values.begin());
  const double h = orbit.T / static_cast<double>(orbit.intervals());
  const double center = orbit.t[i];
  const auto [x, value] = numerics::goldenMaximize(
      [&](double t) { return orbit(t)[component]; }, center - h, center + h,
      1e-14 * orbit.T);
  (void)x;
  return std::max(*best, value);
}

}  // namespace

double liouvilleDeterminant(const SystemSpec& spec,
                            const PeriodicOrbit2D& orbit) {
  const double integral = orbitIntegral(orbit, [&](double t, const State2& y) {
    const Matrix2 j = lotkaVolterraJacobian(spec, t, y);
    return j[0][0] + j[1][1];
  });
  return std::exp(integral);
}

std::pair<double, double> orbitAverages(const PeriodicOrbit2D& orbit,
                                        const Exponent& p) {
  if (p.isInfinite()) return {orbitMax(orbit, 0), orbitMax(orbit, 1)};
  const double exponent = p.value();
  const State2 peak{orbitMax(orbit, 0), orbitMax(orbit, 1)};
  auto average = [&](int k) {
    if (exponent == 1.0) {
      return orbitIntegral(orbit, [k](double, const State2& y) {
               return y[k];
             }) /
             orbit.T;
    }
    const double mean =
        orbitIntegral(orbit, [&](double, const State2& y) {
          return std::pow(std::max(0.0, y[k]) / peak[k], exponent);
        }) /
        orbit.T;
    return peak[k] * std::pow(mean, 1.0 / exponent);
  };
  return {average(0), average(1)};
}

VerificationReport verifyPredictions(const SystemSpec& spec,
                                     const PeriodicOrbit2D& orbit,
                                     double slackTolerance) {
  VerificationReport report;
  const RegionSpec base = makeRegion(spec, Exponent::infinity());
  const RegionBounds uv = base.bounds;
  const double uMax = orbitMax(orbit, 0);
  const double vMax = orbitMax(orbit, 1);
  report.checks.push_back(
      {"sup u <= U", uv.U - uMax, uMax <= uv.U + slackTolerance});
  report.checks.push_back(
      {"sup v <= V", uv.V - vMax, vMax <= uv.V + slackTolerance});
  for (const Exponent& p :
       {Exponent::finite(1.0), Exponent::finite(1.5), Exponent::finite(2.0),
        Exponent::finite(4.0), Exponent::finite(10.0), Exponent::infinity()}) {
    const auto [ubar, vbar] = orbitAverages(orbit, p);
    const double slack = cpSlack(base.withExponent(p), ubar, vbar);
    report.checks.push_back({"averages in C_p, p = " + p.toString(), slack,
                             slack >= -slackTolerance});
  }
  report.allPassed = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const auto& c) { return c.passed; });
  return report;
}

MultiStartResult multiStart(const SystemSpec& spec, std::size_t count,
                            std::uint64_t seed, const NewtonOptions& opts) {
  const RegionBounds uv = computeUV(spec);
  if (!(uv.U > 0.0) || !(uv.V > 0.0)) {
    throw InvalidArgument("multi-start box (0,U] x (0,V] is empty");
  }
  std::mt19937_64 rng(seed);
  // (0, 1] so that guesses never sit on the axes.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<State2> guesses(count);
  for (State2& g : guesses) {
    g = {uv.U * (1.0 - unit(rng)), uv.V * (1.0 - unit(rng))};
  }

  std::vector<std::future<std::optional<PeriodicOrbit2D>>> jobs;
  jobs.reserve(count);
  for (const State2& g : guesses) {
    jobs.push_back(std::async(std::launch::async,
                              [&spec, g, &opts]() -> std::optional<PeriodicOrbit2D> {
                                try {
                                  return findCoexistence(spec, g, opts);
                                } catch (const Error&) {
                                  return std::nullopt;
                                }
                              }));
  }

  MultiStartResult result;
  std::vector<PeriodicOrbit2D> found;
  for (auto& job : jobs) {
    std::optional<PeriodicOrbit2D> orbit = job.get();
    if (orbit) {
      ++result.converged;
      found.push_back(std::move(*orbit));
    } else {
      ++result.failed;
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      result.spread =
          std::max(result.spread, maxNorm(found[i].start(), found[j].start()));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
    return l.start() < r.start();
  });
  for (auto& o : found) {
    const bool duplicate = std::any_of(
        result.orbits.begin(), result.orbits.end(), [&](const auto& kept) {
          return maxNorm(kept.start(), o.start()) < 1e-6;
        });
    if (!duplicate) result.orbits.push_back(std::move(o));
  }
  return result;
}

}  // namespace lvp
