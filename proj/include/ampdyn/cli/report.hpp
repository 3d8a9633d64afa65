#pragma once

#include <set>
#include <string>

#include "ampdyn/core/matrix.hpp"
#include "ampdyn/exactpoly/algebraic.hpp"
#include "ampdyn/exactpoly/number_field.hpp"

namespace ampdyn::cli::wire {

// Wire encodings of exact values; see docs/format.md.
std::string boolean(bool b);
std::string number(const mpz_class& z);
std::string number(const mpq_class& q);
std::string vector(const IntVector& v);
std::string vector(const RatVector& v);
std::string vector(const std::vector<IntVector>& vs);
std::string matrix(const IntMatrix& m);
std::string matrix(const RatMatrix& m);
std::string poly(const exactpoly::IntPoly& p);   // ascending coefficients
std::string poly(const exactpoly::RatPoly& p);
std::string set(const std::set<unsigned long>& s);
std::string algebraic(const exactpoly::AlgebraicReal& x);  // {min_poly: [..], lo: p/q, hi: p/q}
std::string field_vector(const exactpoly::FieldVector& v);
std::string field_matrix(const exactpoly::FieldMatrix& m);

// Dyadic rational k / 2^bits rounded down or up from x.
mpq_class dyadic_floor(double x, int bits);
mpq_class dyadic_ceil(double x, int bits);

}  // namespace ampdyn::cli::wire
