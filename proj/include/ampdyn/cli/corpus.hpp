#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ampdyn/cli/problem.hpp"

namespace ampdyn::cli {

struct CorpusSpec {
  ProblemKind kind = ProblemKind::Abelian;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 3;  // abelian n, lattice rank, largest cone dimension, largest poly degree
  long bound = 3;       // entry magnitude
  std::optional<IntMatrix> gram;  // lattice; defaults to diag(1, -2) for rank 2, else diag(1, -1, ...)
};

// Deterministic in the spec alone: (file name, problem) pairs named <kind>_NNNN.prob.
// Cone problems are designed descent systems: a simplicial cone whose fixed rays are
// permuted, the remaining rays expanded by distinct factors, and B vanishing on the fixed rays.
std::vector<std::pair<std::string, ProblemFile>> generate_corpus(const CorpusSpec& spec);

void write_corpus(const std::string& dir, const std::vector<std::pair<std::string, ProblemFile>>& corpus);

}  // namespace ampdyn::cli
