#pragma once

#include "ampdyn/core/matrix.hpp"

namespace ampdyn::conedyn {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  RatVector x;
  mpq_class value;
};

// min c.x subject to A x = b, x >= 0. Exact two-phase simplex with Bland's rule.
LpResult lp_minimize(const RatMatrix& a, const RatVector& b, const RatVector& c);

// Some x >= 0 with A x = b.
std::optional<RatVector> lp_feasible(const RatMatrix& a, const RatVector& b);

}  // namespace ampdyn::conedyn
