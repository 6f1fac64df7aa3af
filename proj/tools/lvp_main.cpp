// Command-line front end for the periodic Lotka-Volterra stability toolkit.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lvp/cli.hpp"
#include "lvp/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Stability tests for periodic predator-prey systems"};
  std::string config;
  std::string command = "analyze";
  std::string pText;
  std::string outDir = ".";
  bool csv = false;
  app.add_option("--config", config, "system description file");
  app.add_option("--command", command,
                 "analyze | scan | region | jfunc | simulate | example1");
  app.add_option("--p", pText, "comma-separated exponents, e.g. 1,2,inf");
  app.add_option("--out", outDir, "directory for CSV artifacts");
  app.add_flag("--csv", csv, "also write CSV for analyze/scan/simulate");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : lvp::cli::kExitError;
  }

  lvp::cli::RunConfig run;
  run.systemFile = config;
  run.outputDir = outDir;
  run.emitCsv = csv;
  try {
    run.command = lvp::cli::parseCommand(command);
    if (!pText.empty()) run.pList = lvp::cli::parsePList(pText);
  } catch (const lvp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lvp::cli::kExitError;
  }
  return lvp::cli::runCommand(run, std::cout, std::cerr);
}
