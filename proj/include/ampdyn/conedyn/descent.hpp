#pragma once

#include "ampdyn/conedyn/cone.hpp"

namespace ampdyn::conedyn {

struct DescentStep {
  unsigned long power = 1;  // phi was replaced by phi^power before contracting
  RatVector fixed_point;    // fixed class x that forced the step (B(x) = 0)
  IntVector ray;
  RatMatrix quotient;
  RatMatrix section;
  RatMatrix induced;
  // No lift y in C has phi(y) - y a nonzero multiple of the ray.
  bool lift_guard = false;
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  std::vector<RatVector> big_class_path;  // B_1 = B, B_{i+1} = B_i o section_i
  bool final_amplified = false;
  RatMatrix final_matrix;
  std::vector<IntVector> final_rays;
};

// Contracts fixed extremal rays until the map becomes amplified.
// Throws HypothesisViolated when a fixed cone class pairs nonzero with B.
DescentTrace descend(const ConeEndo& e, const RatVector& big);

// Checks the lemma-4.6 style guard for one step: every y in C with phi(y) - y in span(ray)
// is fixed.
bool lift_guard_holds(const ConeEndo& e, const RatVector& ray);

}  // namespace ampdyn::conedyn
