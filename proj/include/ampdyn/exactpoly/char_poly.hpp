#pragma once

#include "ampdyn/core/matrix.hpp"
#include "ampdyn/exactpoly/int_poly.hpp"

namespace ampdyn::exactpoly {

// Monic det(xI - M), by Bareiss determinants at n+1 integer nodes and exact interpolation.
IntPoly char_poly(const IntMatrix& m);

// Primitive integer polynomial with the same roots as det(xI - M) (leading coefficient may exceed 1).
IntPoly char_poly(const RatMatrix& m);

// Unique polynomial of degree < n through (xs[i], ys[i]).
RatPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

// Companion matrix with last column -a_0..-a_{n-1}; char_poly(companion(p)) == p for monic p.
IntMatrix companion(const IntPoly& monic);

// p(M) for a square matrix M.
IntMatrix evaluate(const IntPoly& p, const IntMatrix& m);

mpz_class resultant(const IntPoly& a, const IntPoly& b);

// Res_y(p(y), y^n p(x/y)): a polynomial whose roots are all products of two roots of p.
IntPoly pair_product_polynomial(const IntPoly& p);

}  // namespace ampdyn::exactpoly
