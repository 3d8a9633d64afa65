#pragma once

#include <vector>

#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::exactpoly {

// Sturm chain of the squarefree part of a polynomial, kept with integer coefficients
// (each remainder is rescaled by a positive factor, which leaves sign variations intact).
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  // Sign variations at r, zeros skipped.
  int variations_at(const mpq_class& r) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

  // Distinct real roots in (a, b]. Endpoints may be roots: with zeros skipped,
  // V(c) equals V(c+) at a root c, so V(a) - V(b) counts exactly (a, b].
  int count(const mpq_class& a, const mpq_class& b) const;
  int count_real() const;

  const IntPoly& squarefree() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

// Distinct real roots of p in (a, b].
int sturm_count(const IntPoly& p, const mpq_class& a, const mpq_class& b);

}  // namespace ampdyn::exactpoly
