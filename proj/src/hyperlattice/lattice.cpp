#include "ampdyn/hyperlattice/lattice.hpp"

#include "ampdyn/exactpoly/char_poly.hpp"
#include "ampdyn/exactpoly/inertia.hpp"
#include "ampdyn/exactpoly/sturm.hpp"

namespace ampdyn::hyperlattice {

bool has_hyperbolic_signature(const IntMatrix& gram) {
  if (!gram.is_square() || gram.rows() == 0 || gram != gram.transpose()) return false;
  if (determinant(gram) == 0) return false;
  const exactpoly::IntPoly p = exactpoly::char_poly(gram);
  const exactpoly::Inertia in = exactpoly::inertia(gram);
  // Distinct positive roots by Sturm and the count with multiplicity by Descartes must both be one.
  const exactpoly::SturmSequence s(p);
  const int distinct_positive = s.variations_at(0) - s.variations_at_pos_infinity();
  return in.positive == 1 && distinct_positive == 1 && in.zero == 0;
}

namespace {

IntVector choose_reference(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  if (gram(0, 0) > 0) {
    IntVector e(n, mpz_class(0));
    e[0] = 1;
    return e;
  }
  // Exhaustive search over |entries| <= 3 in lexicographic order; the first maximizer with a
  // positive leading entry wins (q is even, so this fixes the sign).
  IntVector best, cur(n, mpz_class(-3));
  mpz_class best_q = 0;
  while (true) {
    mpz_class q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += cur[i] * gram(i, j) * cur[j];
    std::size_t lead = 0;
    while (lead < n && cur[lead] == 0) ++lead;
    if (lead < n && cur[lead] > 0 && q > best_q) best_q = q, best = cur;
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == 3) cur[--k] = -3;
    if (k == 0) break;
    cur[k - 1] += 1;
  }
  if (best.empty()) fail(ErrorKind::BadSignature, "no vector with q > 0 among small integer vectors");
  return primitive_integer(to_rational(best));
}

}  // namespace

QuadLattice::QuadLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) fail(ErrorKind::Dimension, "Gram matrix must be square and nonempty");
  if (gram_ != gram_.transpose()) fail(ErrorKind::BadSignature, "Gram matrix is not symmetric");
  if (!has_hyperbolic_signature(gram_)) fail(ErrorKind::BadSignature, "Gram matrix does not have signature (1, rank - 1)");
  reference_ = choose_reference(gram_);
}

mpz_class QuadLattice::pair(const IntVector& a, const IntVector& b) const {
  if (a.size() != rank() || b.size() != rank()) fail(ErrorKind::Dimension, "vector length differs from the lattice rank");
  mpz_class acc = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (gram_(i, j) != 0) acc += a[i] * gram_(i, j) * b[j];
  return acc;
}

mpq_class QuadLattice::pair(const RatVector& a, const RatVector& b) const {
  if (a.size() != rank() || b.size() != rank()) fail(ErrorKind::Dimension, "vector length differs from the lattice rank");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (gram_(i, j) != 0) acc += a[i] * gram_(i, j) * b[j];
  return acc;
}

LatticeIsometry::LatticeIsometry(QuadLattice lattice, IntMatrix g) : lattice_(std::move(lattice)), g_(std::move(g)) {
  if (!g_.is_square() || g_.rows() != lattice_.rank()) fail(ErrorKind::Dimension, "isometry size differs from the lattice rank");
  if (g_.transpose() * lattice_.gram() * g_ != lattice_.gram()) fail(ErrorKind::NotIsometry, "g^T Q g != Q");
  const mpz_class d = determinant(g_);
  ensure(d == 1 || d == -1, "an isometry of a nondegenerate lattice has det +-1");
}

LatticeIsometry LatticeIsometry::power(unsigned long k) const { return LatticeIsometry(lattice_, ampdyn::power(g_, k)); }

LatticeIsometry verify_isometry(const QuadLattice& lattice, const IntMatrix& g) { return LatticeIsometry(lattice, g); }

}  // namespace ampdyn::hyperlattice
