#pragma once

#include <string>
#include <vector>

#include "ampdyn/cli/commands.hpp"

namespace ampdyn::cli {

struct BatchEntry {
  std::string file;  // name relative to the batch directory
  RunOutcome outcome;
};

struct BatchResult {
  std::vector<BatchEntry> entries;  // sorted by file name
  std::vector<Field> summary;
  int exit_code = kOk;  // largest per-file exit code
};

// Runs the per-kind default command on every regular file in dir, optionally on
// `parallel` worker threads. Output does not depend on `parallel`.
BatchResult run_batch(const std::string& dir, const Options& opts, unsigned parallel = 1);

std::string serialize(const BatchResult& b);
// Failed files (every file when verbose) followed by the summary counts.
std::string human_summary(const BatchResult& b, bool verbose);

}  // namespace ampdyn::cli
