#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "lvp/cli.hpp"
#include "lvp/config.hpp"
#include "lvp/constant_case.hpp"

namespace fs = std::filesystem;
using lvp::cli::Command;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lvp_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path writeConfig(const fs::path& dir, const lvp::SystemSpec& spec) {
  const fs::path file = dir / "system.cfg";
  std::ofstream(file) << lvp::formatConfig(spec);
  return file;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(lvp::cli::RunConfig c, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = lvp::cli::runCommand(c, o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

}  // namespace

TEST_CASE("command and p list parsing") {
  CHECK((lvp::cli::parseCommand("example1") == Command::example1));
  CHECK_THROWS(lvp::cli::parseCommand("plot"));
  const auto ps = lvp::cli::parsePList("1,2.5, inf");
  REQUIRE(ps.size() == 3);
  CHECK(ps[2].isInfinite());
  CHECK_THROWS(lvp::cli::parsePList("1,0.5"));
  CHECK_THROWS(lvp::cli::parsePList("1,,2"));
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("exit");
  lvp::cli::RunConfig c;
  c.outputDir = dir.string();
  c.systemFile = writeConfig(dir, lvp::constantSystem(1, 1, 1, 1, -10, 1, 1)).string();
  CHECK(run(c) == lvp::cli::kExitNoCoexistence);
  c.systemFile = writeConfig(dir, lvp::exampleOneSystem().toSpec()).string();
  CHECK(run(c) == lvp::cli::kExitConclusive);
  // condition19 fails by a tie and every direct test fails at T = 2
  c.systemFile = writeConfig(dir, lvp::constantSystem(2, 3, 1, 1, 1, 1, 1)).string();
  CHECK(run(c) == lvp::cli::kExitInconclusive);
  c.systemFile = (dir / "missing.cfg").string();
  CHECK(run(c) == lvp::cli::kExitError);
  c.systemFile.clear();
  CHECK(run(c) == lvp::cli::kExitError);
}

TEST_CASE("example1 report") {
  lvp::cli::RunConfig c;
  c.command = Command::example1;
  c.outputDir = scratch("ex1").string();
  std::string out;
  CHECK(run(c, &out) == 0);
  CHECK(out.find("1,2,198.07933244511") != std::string::npos);
  CHECK(out.find("(true, true, true)") != std::string::npos);
  CHECK(out.find(lvp::kSignDiscrepancyNote) != std::string::npos);
}

TEST_CASE("region CSV contains only on-curve points") {
  const fs::path dir = scratch("region");
  lvp::cli::RunConfig c;
  c.command = Command::region;
  c.outputDir = dir.string();
  c.systemFile = writeConfig(dir, lvp::exampleOneSystem().toSpec()).string();
  c.pList = lvp::cli::parsePList("2,inf");
  REQUIRE(run(c) == 0);
  std::ifstream in(dir / "region_p2.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "curve_label,x,y");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows > 100);
  CHECK(fs::exists(dir / "region_pinf.csv"));
}

TEST_CASE("jfunc CSV stays within [2, pi] and is deterministic") {
  const fs::path dir = scratch("jfunc");
  lvp::cli::RunConfig c;
  c.command = Command::jfunc;
  c.outputDir = dir.string();
  REQUIRE(run(c) == 0);
  const std::string first = slurp(dir / "jfunc.csv");
  REQUIRE(run(c) == 0);
  CHECK(slurp(dir / "jfunc.csv") == first);
  std::istringstream in(first);
  std::string line;
  std::getline(in, line);
  CHECK(line == "p,scriptF");
  int rows = 0;
  bool sawInf = false;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    sawInf = sawInf || line.substr(0, comma) == "inf";
    const double v = std::stod(line.substr(comma + 1));
    CHECK(v >= 2.0 - 1e-9);
    CHECK(v <= std::numbers::pi + 1e-9);
    ++rows;
  }
  CHECK(rows >= 40);
  CHECK(sawInf);
}

TEST_CASE("simulate writes the orbit") {
  const fs::path dir = scratch("sim");
  lvp::cli::RunConfig c;
  c.command = Command::simulate;
  c.outputDir = dir.string();
  c.emitCsv = true;
  c.systemFile = writeConfig(dir, lvp::exampleOneSystem().toSpec()).string();
  std::string out;
  CHECK(run(c, &out) == 0);
  CHECK(out.find("asymptoticallyStable") != std::string::npos);
  CHECK(fs::exists(dir / "orbit.csv"));
}

TEST_CASE("the executable maps flags onto the same exit codes") {
  const char* exe = std::getenv("LVP_CLI");
  if (!exe) return;
  const fs::path dir = scratch("exe");
  const fs::path cfg = writeConfig(dir, lvp::constantSystem(1, 1, 1, 1, -10, 1, 1));
  const std::string base = std::string(exe) + " --out " + dir.string();
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status(base + " --config " + cfg.string()) == 3);
  CHECK(status(base + " --command example1") == 0);
  CHECK(status(base + " --command nonsense") == 1);
  CHECK(status(base + " --command jfunc --p 1,0.2") == 1);
  CHECK(status(base + " --bogus") == 1);
}
