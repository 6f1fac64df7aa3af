#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvp/criteria.hpp"
#include "lvp/exponent.hpp"
#include "lvp/region.hpp"

namespace lvp::cli {

enum class Command { analyze, region, jfunc, scan, simulate, example1 };

/// Process exit codes.
inline constexpr int kExitConclusive = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitNoCoexistence = 3;

struct RunConfig {
  std::string systemFile;
  Command command = Command::analyze;
  std::vector<Exponent> pList;
  std::string outputDir = ".";
  bool emitCsv = false;
};

/// Throws InvalidArgument for unknown names.
Command parseCommand(std::string_view name);
std::string toString(Command command);

/// Comma-separated exponents; "inf" allowed. Throws InvalidArgument.
std::vector<Exponent> parsePList(std::string_view text);

/// Default p grid for each command when none is given.
std::vector<Exponent> defaultPList(Command command);

/// Executes one command, writing the report to `out` and CSV artifacts into
/// outputDir. Errors are reported on `err` and mapped to kExitError.
int runCommand(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Boundary samples as CSV (curve_label,x,y); only samples whose defining
/// equality holds within 1e-9 are written.
void writeRegionCsv(const RegionSpec& region, std::size_t n,
                    std::ostream& out);

/// (p, scriptF(p)) rows; infinity printed as "inf".
void writeJfuncCsv(const std::vector<Exponent>& grid, std::ostream& out);

/// Human-readable stability report.
void printReport(const StabilityReport& report, std::ostream& out);

}  // namespace lvp::cli
