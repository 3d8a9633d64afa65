#include "ampdyn/abelian/endo.hpp"

namespace ampdyn::abelian {

EndoSpec::EndoSpec(IntMatrix matrix, bool has_translation)
    : matrix_(std::move(matrix)), has_translation_(has_translation) {
  if (!matrix_.is_square()) fail(ErrorKind::Dimension, "endomorphism matrix must be square");
  if (matrix_.rows() == 0) fail(ErrorKind::Dimension, "endomorphism matrix must be at least 1x1");
  det_ = determinant(matrix_);
  if (det_ == 0) fail(ErrorKind::NotSurjective, "det(M) = 0: not surjective");
}

EndoSpec EndoSpec::power(unsigned long k) const {
  if (k == 0) fail(ErrorKind::Domain, "power must be positive");
  mpz_class d;
  mpz_pow_ui(d.get_mpz_t(), det_.get_mpz_t(), k);
  return EndoSpec(ampdyn::power(matrix_, k), has_translation_, d);
}

EndoSpec product(const EndoSpec& a, const EndoSpec& b) {
  return EndoSpec(block_diagonal(a.matrix(), b.matrix()), a.has_translation() || b.has_translation());
}

}  // namespace ampdyn::abelian
