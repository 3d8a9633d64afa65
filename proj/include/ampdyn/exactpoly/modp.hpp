#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::exactpoly {

// Degrees of the irreducible factors of p modulo prime (ascending), by distinct-degree
// factorization. nullopt is the retry signal: prime divides the leading coefficient or
// p is not squarefree modulo prime.
std::optional<std::vector<int>> factor_degrees_mod_prime(const IntPoly& p, std::uint32_t prime);

bool is_prime(std::uint32_t n);

struct IrreducibilityEvidence {
  bool certified = false;
  std::vector<std::uint32_t> primes_used;
  // Degrees d in [1, deg-1] still possible for a factor over Z after all primes.
  std::vector<int> surviving_degrees;
};

// Intersects the possible factor degrees over the first usable primes (at most max_primes).
// Degree <= 3 is settled exhaustively by the rational root test.
IrreducibilityEvidence certify_irreducible(const IntPoly& p, int max_primes = 20);

}  // namespace ampdyn::exactpoly
