#pragma once

#include "ampdyn/core/matrix.hpp"

namespace ampdyn::abelian {

// f = g + a on A = E^n (E without complex multiplication): g acts on the tangent
// space by the integer matrix M, the translation a only as a flag.
class EndoSpec {
 public:
  // Rejects non-square, empty and singular matrices (det(M) = 0 is not surjective).
  explicit EndoSpec(IntMatrix matrix, bool has_translation = false);

  std::size_t n() const noexcept { return matrix_.rows(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  bool has_translation() const noexcept { return has_translation_; }

  EndoSpec with_translation(bool flag) const { return EndoSpec(matrix_, flag, det_); }
  EndoSpec transpose() const { return EndoSpec(matrix_.transpose(), has_translation_, det_); }
  EndoSpec power(unsigned long k) const;
  const mpz_class& det() const noexcept { return det_; }

 private:
  EndoSpec(IntMatrix matrix, bool has_translation, mpz_class det)
      : matrix_(std::move(matrix)), has_translation_(has_translation), det_(std::move(det)) {}

  IntMatrix matrix_;
  bool has_translation_;
  mpz_class det_;
};

EndoSpec product(const EndoSpec& a, const EndoSpec& b);

}  // namespace ampdyn::abelian
