#pragma once

#include <iosfwd>
#include <string>

namespace ptwitness::cli {

/// Everything a run needs; flags map onto these fields one-to-one.
struct RunConfig {
  std::string input_path;
  std::string command;  // moments | scan | minors | criteria | oracle
  int n_max = 10;
  double tolerance = 1e-8;
  std::string format = "json";  // json | csv | text
  bool allow_truncation = false;
  int pool_degree = 3;  // minors: monomial degree of the index pool
  int minor_size = 4;   // minors: largest subset searched
};

/// Exit codes. Verdicts live in the payload, never in the exit code:
/// detecting entanglement is not an error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformedInput = 2;
inline constexpr int kExitTruncation = 3;
inline constexpr int kExitOracleNeedsState = 4;

/// Runs one command against the input file and writes the report to `out`.
/// Diagnostics go to `err`. Output is byte-identical for identical configs
/// and inputs.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// argv front end (CLI11). Returns the run_command exit code, or the parser's
/// code for bad flags / --help.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptwitness::cli
