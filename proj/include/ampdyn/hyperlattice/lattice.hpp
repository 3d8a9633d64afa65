#pragma once

#include "ampdyn/core/matrix.hpp"

namespace ampdyn::hyperlattice {

// Integral quadratic form of signature (1, rank - 1), with a reference vector h (q(h) > 0)
// selecting the positive cone component.
class QuadLattice {
 public:
  explicit QuadLattice(IntMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const IntVector& reference() const noexcept { return reference_; }

  mpz_class q(const IntVector& v) const { return pair(v, v); }
  mpz_class pair(const IntVector& a, const IntVector& b) const;
  mpq_class pair(const RatVector& a, const RatVector& b) const;

 private:
  IntMatrix gram_;
  IntVector reference_;
};

// Exact signature test: nonsingular with exactly one positive eigenvalue.
bool has_hyperbolic_signature(const IntMatrix& gram);

class LatticeIsometry {
 public:
  // Rejects g unless g^T Q g = Q.
  LatticeIsometry(QuadLattice lattice, IntMatrix g);

  const QuadLattice& lattice() const noexcept { return lattice_; }
  const IntMatrix& matrix() const noexcept { return g_; }
  LatticeIsometry power(unsigned long k) const;

 private:
  QuadLattice lattice_;
  IntMatrix g_;
};

LatticeIsometry verify_isometry(const QuadLattice& lattice, const IntMatrix& g);

}  // namespace ampdyn::hyperlattice
