#pragma once

#include <vector>

#include "ampdyn/conedyn/cone.hpp"

namespace ampdyn::conedyn {

struct PerronLimit {
  std::vector<double> ray;  // l1-normalized limit direction
  double rate = 0;          // r = |phi(y)|_1
  double residual = 0;      // |phi(y) - r y|_inf
  int iterations = 0;
  bool certified = false;   // residual < 1e-6
};

// Normalized power iteration from an interior point. Throws NoConvergence when the
// iterates have not settled after 200 steps.
PerronLimit power_limit_ray(const ConeEndo& e, const RatVector& start);

}  // namespace ampdyn::conedyn
