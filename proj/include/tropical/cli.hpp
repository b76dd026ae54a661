#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropical/closure.hpp"

namespace tropical::cli {

enum class Command { Closure, Solve, Factor, Paths, Profit, Invert };
enum class OutputFormat { Json, Table };

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kDimension = 3,
  kStarUndefined = 4,
  kUnknownSemiring = 5,
};

struct RunConfig {
  Command command = Command::Closure;
  /// "NAME" or "NAME,a,b".
  std::string semiring;
  bool interval = false;
  ClosureOptions closure;
  /// closure/factor/invert: one file; solve: A and B; paths: graph;
  /// profit: graph and terminal vector.
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::Json;
  bool count_ops = false;
  unsigned threads = 1;
  /// Profit horizon; empty means unbounded.
  std::optional<int> horizon;
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
  std::string diagnostic;
};

/// Executes one command. Never throws; failures become a nonzero exit code
/// plus a diagnostic.
RunResult run(const RunConfig& config);

/// Parses command-line arguments and runs. Writes the result to `out` and
/// diagnostics to `err`; returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
