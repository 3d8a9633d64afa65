#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ampdyn/cli/envelope.hpp"
#include "ampdyn/cli/problem.hpp"
#include "ampdyn/core/errors.hpp"

namespace ampdyn::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidInput = 2,
  kHypothesisViolated = 3,
  kIncomplete = 4,
};

int exit_code_for(ErrorKind kind);

struct Options {
  unsigned long power = 1;
  std::optional<unsigned long> modulus;
  int max_degree = 16;
  bool verbose = false;
};

struct RunOutcome {
  int exit_code = kOk;
  ReportEnvelope envelope;
};

const std::vector<std::string>& command_names();
bool is_command(const std::string& name);
// Command used by batch mode for each kind.
const char* default_command(ProblemKind kind);

// Runs one command on problem text. Never throws for bad input: failures are reported as
// result.error / result.message with the matching exit code.
RunOutcome run(const std::string& command, const std::string& text, const Options& opts);
RunOutcome run_file(const std::string& command, const std::string& path, const Options& opts);

// Aligned key/value table; long values are elided unless verbose.
std::string human_table(const ReportEnvelope& e, bool verbose);

}  // namespace ampdyn::cli
