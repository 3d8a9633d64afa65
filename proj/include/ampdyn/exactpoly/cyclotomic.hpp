#pragma once

#include <map>
#include <set>
#include <vector>

#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::exactpoly {

unsigned long euler_phi(unsigned long d);

// Every d with phi(d) <= bound, ascending.
std::vector<unsigned long> orders_with_phi_at_most(unsigned long bound);

// Phi_d, by exact division of x^d - 1 by the lower cyclotomic polynomials.
IntPoly cyclotomic(unsigned long d);

// Memoizing generator for cyclotomic polynomials. Not thread-safe; use one per call.
class CyclotomicTable {
 public:
  const IntPoly& get(unsigned long d);

 private:
  std::map<unsigned long, IntPoly> cache_;
};

// All d such that Phi_d divides p.
std::set<unsigned long> cyclotomic_divisors(const IntPoly& p);

// True iff the monic polynomial p is a product of cyclotomic polynomials.
bool is_cyclotomic_product(const IntPoly& p);

struct CyclotomicSplit {
  IntPoly remainder;                                      // no cyclotomic factor left
  std::vector<std::pair<unsigned long, unsigned>> factors;  // (d, multiplicity)
};

// p = remainder * prod Phi_d^mult.
CyclotomicSplit strip_cyclotomic(const IntPoly& p);

}  // namespace ampdyn::exactpoly
