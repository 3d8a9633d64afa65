#include "ampdyn/cli/report.hpp"

#include <cmath>

namespace ampdyn::cli::wire {

namespace {

template <class Seq, class Fn>
std::string list(const Seq& s, Fn fn) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += fn(x);
    first = false;
  }
  return out + "]";
}

template <class T>
std::string dense(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += list(m.row(i), [](const T& x) { return number(x); });
  }
  return out + "]";
}

mpq_class dyadic(double x, int bits, bool up) {
  if (!std::isfinite(x)) fail(ErrorKind::Domain, "non-finite value");
  const double scaled = std::ldexp(x, bits);
  mpz_class k(up ? std::ceil(scaled) : std::floor(scaled));
  mpz_class den = 1;
  den <<= bits;
  mpq_class q(k, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string boolean(bool b) { return b ? "true" : "false"; }
std::string number(const mpz_class& z) { return z.get_str(); }
std::string number(const mpq_class& q) { return to_string(q); }
std::string vector(const IntVector& v) { return list(v, [](const mpz_class& x) { return number(x); }); }
std::string vector(const RatVector& v) { return list(v, [](const mpq_class& x) { return number(x); }); }
std::string vector(const std::vector<IntVector>& vs) {
  return list(vs, [](const IntVector& v) { return vector(v); });
}
std::string matrix(const IntMatrix& m) { return dense(m); }
std::string matrix(const RatMatrix& m) { return dense(m); }
std::string poly(const exactpoly::IntPoly& p) { return vector(p.coeffs()); }
std::string poly(const exactpoly::RatPoly& p) { return vector(p.coeffs()); }
std::string set(const std::set<unsigned long>& s) {
  return list(s, [](unsigned long d) { return std::to_string(d); });
}

std::string algebraic(const exactpoly::AlgebraicReal& x) {
  return "{min_poly: " + poly(x.min_poly) + ", lo: " + number(x.lo) + ", hi: " + number(x.hi) + "}";
}

std::string field_vector(const exactpoly::FieldVector& v) {
  return list(v, [](const exactpoly::RatPoly& p) { return poly(p); });
}

std::string field_matrix(const exactpoly::FieldMatrix& m) {
  return list(m, [](const exactpoly::FieldVector& r) { return field_vector(r); });
}

mpq_class dyadic_floor(double x, int bits) { return dyadic(x, bits, false); }
mpq_class dyadic_ceil(double x, int bits) { return dyadic(x, bits, true); }

}  // namespace ampdyn::cli::wire
