#pragma once

#include <optional>
#include <string>

#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::exactpoly {

// A real algebraic number: the unique root of min_poly in the half-open interval (lo, hi].
// min_poly is a squarefree primitive carrier; it is linear when the number is an integer.
struct AlgebraicReal {
  IntPoly min_poly;
  mpq_class lo;
  mpq_class hi;

  double approx() const;
  mpq_class width() const { return hi - lo; }
  std::string to_string() const;
};

// Default isolation width: 2^-20 < 10^-6.
mpq_class default_isolation_width();

// Largest real root of p in (a, b], isolated to the given width; nullopt when there is none.
std::optional<AlgebraicReal> largest_root_in(const IntPoly& p, const mpq_class& a, const mpq_class& b,
                                             const mpq_class& width = default_isolation_width());

std::optional<AlgebraicReal> largest_real_root(const IntPoly& p,
                                               const mpq_class& width = default_isolation_width());

// Bisect until hi - lo <= width.
AlgebraicReal refine(const AlgebraicReal& x, const mpq_class& width);

// Exact comparison: -1, 0, 1.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);
int compare(const AlgebraicReal& a, const mpq_class& r);

// Sign of c(x), exact.
int sign_of(const IntPoly& c, const AlgebraicReal& x);
int sign_of(const RatPoly& c, const AlgebraicReal& x);

// Replaces the carrier by x - k when x is the integer k.
AlgebraicReal normalize_integer(const AlgebraicReal& x);

}  // namespace ampdyn::exactpoly
