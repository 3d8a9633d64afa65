#pragma once

#include <set>

#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::exactpoly {

// For palindromic q of even degree 2m: r with q(x) = x^m r(x + 1/x).
IntPoly trace_polynomial(const IntPoly& palindromic);

// The part of the squarefree part of p that is closed under z -> 1/z, with the
// factors x, x - 1 and x + 1 removed. Palindromic of even degree (possibly constant).
IntPoly self_reciprocal_core(const IntPoly& p);

// Number of distinct complex roots with |z| = 1.
int unit_circle_root_count(const IntPoly& p);

// Number of distinct real roots strictly greater than one.
int real_roots_greater_than_one(const IntPoly& p);

bool is_reciprocal(const IntPoly& p);

struct RootLocationSummary {
  int degree = 0;
  int distinct_unit_circle_roots = 0;
  int distinct_real_roots_gt_one = 0;
  std::set<unsigned long> cyclotomic_divisors;
  bool is_reciprocal = false;
};

RootLocationSummary summarize_roots(const IntPoly& p);

}  // namespace ampdyn::exactpoly
