#include "lvp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "lvp/config.hpp"
#include "lvp/constant_case.hpp"
#include "lvp/errors.hpp"
#include "lvp/existence.hpp"
#include "lvp/jfunc.hpp"
#include "lvp/simulate.hpp"

namespace lvp::cli {

namespace {

constexpr std::size_t kRegionSamples = 200;


std::string num(double value) { return formatReal(value); }

std::string flag(bool value) { return value ? "true" : "false"; }

std::ofstream openArtifact(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.outputDir);
  const std::filesystem::path path =
      std::filesystem::path(config.outputDir) / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path.string() + "'");
  return file;
}

void printResult(const TestResult& r, std::ostream& out) {
  out << "  " << r.name;
  if (r.p) out << " p=" << r.p->toString() << " q=" << r.q->toString();
  out << ": lhs=" << num(r.lhs) << " rhs=" << num(r.rhs)
      << " margin=" << num(r.margin) << " " << (r.passed ? "PASS" : "FAIL")
      << "\n";
  for (const std::string& d : r.diagnostics) out << "    note: " << d << "\n";
}

void writeResultsCsv(const std::vector<TestResult>& results,
                     std::ostream& out) {
  out << "name,p,q,lhs,rhs,margin,passed\n";
  for (const TestResult& r : results) {
    out << r.name << "," << (r.p ? r.p->toString() : "") << ","
        << (r.q ? r.q->toString() : "") << "," << num(r.lhs) << ","
        << num(r.rhs) << "," << num(r.margin) << ","
        << (r.passed ? 1 : 0) << "\n";
  }
}

int exitCodeFor(Conclusion c) {
  switch (c) {
    case Conclusion::uniqueAsymptoticallyStable:
    case Conclusion::globallyStableVia1819:
      return kExitConclusive;
    case Conclusion::inconclusive:
      return kExitInconclusive;
    case Conclusion::noCoexistence:
      return kExitNoCoexistence;
  }
  return kExitError;
}

SystemSpec requireSystem(const RunConfig& config) {
  if (config.systemFile.empty()) {
    throw InvalidArgument("command '" + toString(config.command) +
                          "' needs --config");
  }
  return loadConfig(config.systemFile);
}

int runAnalyze(const RunConfig& config, std::ostream& out) {
  const SystemSpec spec = requireSystem(config);
  const StabilityReport report = scanP(spec, config.pList);
  printReport(report, out);
  out << "classical endpoint conditions:\n";
  printResult(l1Condition(spec), out);
  printResult(lInfCondition(spec), out);
  if (config.emitCsv) {
    std::ofstream csv = openArtifact(config, "tests.csv");
    writeResultsCsv(report.results, csv);
  }
  return exitCodeFor(report.conclusion);
}

int runScan(const RunConfig& config, std::ostream& out) {
  const SystemSpec spec = requireSystem(config);
  const StabilityReport report = scanP(spec, config.pList);
  out << "p,test,lhs,rhs,margin,passed\n";
  for (const TestResult& r : report.results) {
    if (!r.p) continue;
    out << r.p->toString() << "," << r.name << "," << num(r.lhs) << ","
        << num(r.rhs) << "," << num(r.margin) << "," << (r.passed ? 1 : 0)
        << "\n";
  }
  out << "condition18 " << (report.uniqueness1819.first ? "PASS" : "FAIL")
      << ", condition19 " << (report.uniqueness1819.second ? "PASS" : "FAIL")
      << "\n";
  if (report.bestP) out << "best p: " << report.bestP->toString() << "\n";
  out << "conclusion: " << toString(report.conclusion) << "\n";
  if (config.emitCsv) {
    std::ofstream csv = openArtifact(config, "scan.csv");
    writeResultsCsv(report.results, csv);
  }
  return exitCodeFor(report.conclusion);
}

int runRegion(const RunConfig& config, std::ostream& out) {
  const SystemSpec spec = requireSystem(config);
  for (const Exponent& p : config.pList) {
    const RegionSpec region = makeRegion(spec, p);
    const std::string name = "region_p" + p.toString() + ".csv";
    std::ofstream csv = openArtifact(config, name);
    writeRegionCsv(region, kRegionSamples, csv);
    const RegionMaximum xy = supXY(region);
    out << "p=" << p.toString() << " U=" << num(region.bounds.U)
        << " V=" << num(region.bounds.V) << " supXY=" << num(xy.value)
        << (xy.empty ? " (empty)" : "") << " -> " << name << "\n";
  }
  return kExitConclusive;
}

int runJfunc(const RunConfig& config, std::ostream& out) {
  std::ofstream csv = openArtifact(config, "jfunc.csv");
  writeJfuncCsv(config.pList, csv);
  writeJfuncCsv(config.pList, out);
  return kExitConclusive;
}

int runSimulate(const RunConfig& config, std::ostream& out) {
  const SystemSpec spec = requireSystem(config);
  const CoexistenceVerdict verdict = coexistenceExists(spec);
  out << "coexistence condition: " << flag(verdict.exists)
      << " (margins " << num(verdict.margins.first) << ", "
      << num(verdict.margins.second) << ")\n";
  if (!verdict.exists) return kExitNoCoexistence;

  // Averaged constant system's equilibrium as the starting guess.
  const ConstantSystem averaged{spec.T,          spec.a.mean(), spec.b.mean(),
                                spec.c.mean(),   spec.d.mean(), spec.e.mean(),
                                spec.f.mean()};
  State2 guess{};
  const Point eq = equilibrium(averaged);
  if (eq.x > 0.0 && eq.y > 0.0) {
    guess = {eq.x, eq.y};
  } else {
    const RegionBounds uv = computeUV(spec);
    guess = {0.5 * uv.U, 0.5 * uv.V};
  }
  const PeriodicOrbit2D orbit = findCoexistence(spec, guess);
  const FloquetData fl = floquet(spec, orbit);
  const double liouville = liouvilleDeterminant(spec, orbit);
  const double det = fl.monodromy[0][0] * fl.monodromy[1][1] -
                     fl.monodromy[0][1] * fl.monodromy[1][0];
  out << "orbit start: (" << num(orbit.start()[0]) << ", "
      << num(orbit.start()[1]) << ")\n"
      << "newton iterations: " << orbit.iterations
      << ", residual: " << num(orbit.newtonResidual)
      << ", periodicity: " << num(orbit.periodicityResidual) << "\n";
  for (const auto& m : fl.multipliers) {
    out << "multiplier: " << num(m.real()) << " + " << num(m.imag())
        << "i (|m| = " << num(std::abs(m)) << ")\n";
  }
  out << "floquet: " << toString(fl.classification) << "\n"
      << "monodromy det: " << num(det) << ", Liouville: " << num(liouville)
      << "\n";
  const VerificationReport verification = verifyPredictions(spec, orbit);
  for (const PredictionCheck& c : verification.checks) {
    out << "  " << c.name << ": slack " << num(c.slack) << " "
        << (c.passed ? "PASS" : "FAIL") << "\n";
  }
  if (config.emitCsv) {
    std::ofstream csv = openArtifact(config, "orbit.csv");
    csv << "t,u,v\n";
    for (std::size_t i = 0; i < orbit.t.size(); ++i) {
      csv << num(orbit.t[i]) << "," << num(orbit.u[i]) << ","
          << num(orbit.v[i]) << "\n";
    }
  }
  const bool stable =
      fl.classification == FloquetClass::asymptoticallyStable &&
      verification.allPassed;
  return stable ? kExitConclusive : kExitInconclusive;
}

int runExample1(const RunConfig& config, std::ostream& out) {
  const ConstantSystem sys = config.systemFile.empty()
                                 ? exampleOneSystem()
                                 : ConstantSystem::fromSpec(loadConfig(
                                       config.systemFile));
  sys.validate();
  const SystemSpec spec = sys.toSpec();
  const Point x1 = equilibrium(sys);
  const RegionBounds uv = computeUV(spec);
  out << "constant system: T=" << num(sys.T) << " a=" << num(sys.a)
      << " b=" << num(sys.b) << " c=" << num(sys.c) << " d=" << num(sys.d)
      << " e=" << num(sys.e) << " f=" << num(sys.f) << "\n"
      << "C_1 point (x1, y1) = (" << num(x1.x) << ", " << num(x1.y) << ")\n"
      << "k = " << num(kValue(sys)) << "\n"
      << "U = " << num(uv.U) << ", V = " << num(uv.V) << "\n";

  std::vector<double> ps{1.0, 2.0, 200.0};
  for (const Exponent& p : config.pList) {
    if (p.isFinite() && std::find(ps.begin(), ps.end(), p.value()) == ps.end()) {
      ps.push_back(p.value());
    }
  }
  std::sort(ps.begin(), ps.end());
  out << "p,scriptF,h,signOK,G,sign\n";
  for (double p : ps) {
    const HValue h = hOfP(sys, p);
    const double g = gOfP(sys, p);
    out << num(p) << "," << num(scriptF(Exponent::finite(p))) << ","
        << num(h.h) << "," << flag(h.signOK) << "," << num(g) << ","
        << (g > 0 ? "+" : (g < 0 ? "-" : "0")) << "\n";
  }

  const Check25 pattern = check25(sys, 2.0);
  out << "sign pattern G(1)>0, G(2)<0, G(200)>0: (" << flag(pattern.pattern[0])
      << ", " << flag(pattern.pattern[1]) << ", " << flag(pattern.pattern[2])
      << ")\n"
      << "asymptotic check V > r^2/U: " << flag(pattern.limitPositive) << "\n";

  out << "direct evaluation:\n";
  for (const Exponent& p : {Exponent::finite(1.0), Exponent::finite(2.0),
                            Exponent::infinity()}) {
    printResult(intertwinedTest(spec, p), out);
  }
  printResult(unifiedLpTest(spec, Exponent::infinity()), out);
  printResult(weakIntertwinedTest(spec, Exponent::infinity()), out);
  printResult(l1Condition(spec), out);
  printResult(lInfCondition(spec), out);
  for (const std::string& d : pattern.diagnostics) out << "note: " << d << "\n";
  return kExitConclusive;
}

}  // namespace

Command parseCommand(std::string_view name) {
  if (name == "analyze") return Command::analyze;
  if (name == "region") return Command::region;
  if (name == "jfunc") return Command::jfunc;
  if (name == "scan") return Command::scan;
  if (name == "simulate") return Command::simulate;
  if (name == "example1") return Command::example1;
  throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

std::string toString(Command command) {
  switch (command) {
    case Command::analyze:
      return "analyze";
    case Command::region:
      return "region";
    case Command::jfunc:
      return "jfunc";
    case Command::scan:
      return "scan";
    case Command::simulate:
      return "simulate";
    case Command::example1:
      return "example1";
  }
  return "unknown";
}

std::vector<Exponent> parsePList(std::string_view text) {
  std::vector<Exponent> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(
        start,
        comma == std::string_view::npos ? std::string_view::npos
                                        : comma - start);
    out.push_back(Exponent::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Exponent> defaultPList(Command command) {
  auto list = [](std::initializer_list<double> values, bool withInf) {
    std::vector<Exponent> out;
    for (double v : values) out.push_back(Exponent::finite(v));
    if (withInf) out.push_back(Exponent::infinity());
    return out;
  };
  switch (command) {
    case Command::region:
      return list({1.0, 2.0, 10.0, 100.0}, true);
    case Command::jfunc: {
      std::vector<Exponent> grid;
      for (int i = 0; i < 40; ++i) {
        grid.push_back(Exponent::finite(std::pow(1000.0, i / 39.0)));
      }
      grid.push_back(Exponent::infinity());
      return grid;
    }
    case Command::scan:
      return list({1.0, 1.1, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0, 20.0, 50.0,
                   100.0},
                  true);
    default:
      return list({1.0, 2.0}, true);
  }
}

void writeRegionCsv(const RegionSpec& region, std::size_t n,
                    std::ostream& out) {
  const BoundarySamples samples = boundaryPoints(region, n);
  out << "curve_label,x,y\n";
  for (const BoundaryPoint& b : samples.points) {
    if (std::abs(b.residual) > kBoundaryTol) continue;
    out << b.label << "," << num(b.x) << "," << num(b.y) << "\n";
  }
}

void writeJfuncCsv(const std::vector<Exponent>& grid, std::ostream& out) {
  out << "p,scriptF\n";
  for (const Exponent& p : grid) {
    out << p.toString() << "," << num(scriptF(p)) << "\n";
  }
}

void printReport(const StabilityReport& report, std::ostream& out) {
  const BoundaryClassification& c = report.classification;
  out << "lambda = " << num(c.lambda) << ", mu = " << num(c.mu) << "\n"
      << "trivial state stable: " << flag(c.trivialStable) << "\n";
  out << "prey-only state: "
      << (c.preyOnlyStable ? (*c.preyOnlyStable ? "stable" : "unstable")
                           : "absent")
      << "\n";
  out << "predator-only state: "
      << (c.predatorOnlyStable
              ? (*c.predatorOnlyStable ? "stable" : "unstable")
              : "absent")
      << "\n";
  out << "coexistence exists: " << flag(c.coexistenceExists) << " (margins "
      << num(c.margins.first) << ", " << num(c.margins.second) << ")\n";
  for (const std::string& d : c.diagnostics) out << "  note: " << d << "\n";
  out << "tests:\n";
  for (const TestResult& r : report.results) printResult(r, out);
  if (report.bestP) out << "best p: " << report.bestP->toString() << "\n";
  out << "conclusion: " << toString(report.conclusion) << "\n";
}

int runCommand(const RunConfig& input, std::ostream& out, std::ostream& err) {
  RunConfig config = input;
  if (config.pList.empty()) config.pList = defaultPList(config.command);
  try {
    switch (config.command) {
      case Command::analyze:
        return runAnalyze(config, out);
      case Command::scan:
        return runScan(config, out);
      case Command::region:
        return runRegion(config, out);
      case Command::jfunc:
        return runJfunc(config, out);
      case Command::simulate:
        return runSimulate(config, out);
      case Command::example1:
        return runExample1(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace lvp::cli
