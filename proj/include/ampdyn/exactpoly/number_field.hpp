#pragma once

#include <exception>
#include <utility>
#include <vector>

#include "ampdyn/exactpoly/algebraic.hpp"

namespace ampdyn::exactpoly {

// Thrown when the modulus turns out to be reducible; factor is a proper factor of it.
struct ZeroDivisorFound : std::exception {
  explicit ZeroDivisorFound(RatPoly f) : factor(std::move(f)) {}
  const char* what() const noexcept override { return "zero divisor in number field"; }
  RatPoly factor;
};

using FieldVector = std::vector<RatPoly>;
using FieldMatrix = std::vector<std::vector<RatPoly>>;

// Q[t]/(m) with a designated real embedding t -> the root isolated by `embedding`.
// m need not be irreducible up front: whenever an operation meets a zero divisor it
// throws ZeroDivisorFound, and split() yields the field on the factor that carries the root.
class NumberField {
 public:
  explicit NumberField(const AlgebraicReal& embedding);

  const RatPoly& modulus() const { return modulus_; }
  const AlgebraicReal& embedding() const { return embedding_; }
  int degree() const { return modulus_.degree(); }

  RatPoly reduce(const RatPoly& a) const;
  RatPoly add(const RatPoly& a, const RatPoly& b) const { return reduce(a + b); }
  RatPoly sub(const RatPoly& a, const RatPoly& b) const { return reduce(a - b); }
  RatPoly mul(const RatPoly& a, const RatPoly& b) const;
  RatPoly inverse(const RatPoly& a) const;
  RatPoly generator() const { return reduce(RatPoly::x()); }

  // Zero under the embedding. Exact; may throw ZeroDivisorFound.
  bool is_zero(const RatPoly& a) const;
  int sign(const RatPoly& a) const;

  NumberField split(const RatPoly& factor) const;

 private:
  RatPoly modulus_;
  AlgebraicReal embedding_;
};

// Runs fn(field) and retries on the refined field whenever a zero divisor surfaces.
template <class Fn>
auto with_splitting(NumberField field, Fn&& fn) {
  while (true) {
    try {
      return fn(field);
    } catch (const ZeroDivisorFound& z) {
      field = field.split(z.factor);
    }
  }
}

// Right null space basis over the field.
std::vector<FieldVector> kernel_basis(const NumberField& k, FieldMatrix m);

FieldVector mat_vec(const NumberField& k, const FieldMatrix& m, const FieldVector& v);
RatPoly bilinear(const NumberField& k, const FieldVector& a, const std::vector<std::vector<mpq_class>>& gram,
                 const FieldVector& b);

// Substitute t -> image (a field element) in every coordinate.
RatPoly substitute(const NumberField& k, const RatPoly& a, const RatPoly& image);

}  // namespace ampdyn::exactpoly
