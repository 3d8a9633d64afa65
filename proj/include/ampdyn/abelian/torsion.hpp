#pragma once

#include <optional>

#include "ampdyn/abelian/endo.hpp"

namespace ampdyn::abelian {

// Diagonal d_1 | d_2 | ... of the Smith normal form (zeros last for singular input).
std::vector<mpz_class> smith_invariants(const IntMatrix& m);

// det(M^m - I)^2, or nullopt for infinitely many fixed points. Rejects translations.
std::optional<mpz_class> fix_count(const EndoSpec& spec, unsigned long m);

// #Fix(f^m) inside A[N] = (Z/N)^{2n}, from the Smith invariants of M^m - I.
mpz_class torsion_fixed_count(const EndoSpec& spec, unsigned long m, const mpz_class& modulus);

// Same count by enumerating A[N]; refused when N^{2n} > 10^7.
mpz_class torsion_fixed_count_bruteforce(const EndoSpec& spec, unsigned long m, unsigned long modulus);

}  // namespace ampdyn::abelian
