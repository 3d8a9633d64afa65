#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ampdyn/conedyn/cone.hpp"
#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::cli {

enum class ProblemKind { Abelian, Lattice, Cone, Poly };
const char* to_string(ProblemKind k);

// One analysis input. Which fields are meaningful depends on kind.
struct ProblemFile {
  ProblemKind kind = ProblemKind::Abelian;
  std::vector<RatVector> rows;        // abelian / lattice / cone: the map
  bool translation = false;           // abelian
  std::vector<RatVector> gram;        // lattice
  std::vector<RatVector> generators;  // cone
  std::optional<RatVector> big;       // cone
  conedyn::Invariance invariance = conedyn::Invariance::Exact;
  std::optional<RatVector> start;     // cone: power-iteration start point
  exactpoly::IntPoly poly;            // poly

  bool operator==(const ProblemFile& o) const;
};

// Line-oriented format, see docs/format.md. Throws Error(Parse) naming line and field.
ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem(const std::string& path);

// Canonical text: fixed key order, lowest-terms rationals, no comments.
std::string serialize(const ProblemFile& p);

// Exact decimal or "p/q" token; floating-point literals are rejected.
mpq_class parse_rational(std::string_view token);

IntMatrix integer_matrix(const std::vector<RatVector>& rows, const char* what);
RatMatrix rational_matrix(const std::vector<RatVector>& rows);

}  // namespace ampdyn::cli
