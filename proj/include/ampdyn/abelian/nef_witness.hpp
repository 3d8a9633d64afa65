#pragma once

#include <optional>

#include "ampdyn/abelian/endo.hpp"
#include "ampdyn/exactpoly/number_field.hpp"

namespace ampdyn::abelian {

// N^1(E^n) is modeled by symmetric n x n matrices with f^* S = M^T S M; nef = PSD.

// A fixed nef class with entries in Q[y]/(m(y)), y embedded as the isolated root `trace`
// (the trace z + 1/z of a unit-circle eigenvalue z of M).
struct AlgebraicNefClass {
  exactpoly::AlgebraicReal trace;
  exactpoly::FieldMatrix entries;

  RatMatrix approx(int digits_bits = 40) const;
};

struct FixedNefWitness {
  enum class Status { None, Found, SearchFailed };
  Status status = Status::SearchFailed;
  std::optional<RatMatrix> rational;          // Found, over Q
  std::optional<AlgebraicNefClass> algebraic;  // Found, over a real number field
  // Status None: ker(f^* - id) on symmetric matrices, and a positive definite form
  // Frobenius-orthogonal to it, certifying that the kernel meets PSD only in 0.
  std::vector<RatMatrix> fixed_kernel;
  std::optional<RatMatrix> separating_form;
  std::string note;
};

const char* to_string(FixedNefWitness::Status s);

FixedNefWitness fixed_nef_witness(const EndoSpec& spec);

// Nonzero integer PSD S with M^T S M = S, or nullopt exactly when f is PCD.
std::optional<IntMatrix> pcd_nef_witness(const EndoSpec& spec);

// Exact checks used by the witnesses and the tests.
bool is_fixed_class(const IntMatrix& m, const RatMatrix& s);
std::vector<RatMatrix> fixed_symmetric_kernel(const IntMatrix& m);

// Continued-fraction convergent of x with denominator at most max_den.
mpq_class rationalize(double x, long max_den = 1'000'000);

}  // namespace ampdyn::abelian
