#pragma once

#include "ampdyn/core/matrix.hpp"

namespace ampdyn::exactpoly {

// Eigenvalue sign counts of a symmetric matrix, with multiplicity.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Exact: the characteristic polynomial of a symmetric matrix has only real roots, so
// Descartes' rule of signs counts its positive and negative roots exactly.
Inertia inertia(const RatMatrix& symmetric);
Inertia inertia(const IntMatrix& symmetric);

bool is_positive_semidefinite(const RatMatrix& symmetric);
bool is_positive_definite(const RatMatrix& symmetric);

bool is_symmetric(const RatMatrix& m);

}  // namespace ampdyn::exactpoly
