#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ampdyn/core/errors.hpp"

namespace ampdyn::exactpoly {

// Univariate polynomial with exact coefficients; coeffs()[i] is the coefficient of x^i.
// The highest stored coefficient is nonzero; the zero polynomial has no coefficients.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const {
    if (is_zero()) fail(ErrorKind::Domain, "leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
  }

  template <class U>
  U evaluate(const U& x) const {
    U acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + U(coeffs_[i]);
    return acc;
  }

  // p(-x)
  Poly reflect() const {
    std::vector<T> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string(const char* var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

IntPoly pow(const IntPoly& p, unsigned k);

mpz_class content(const IntPoly& p);  // nonnegative gcd of coefficients
// p / content(p), normalized to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

// lc(g)^(deg p - deg g + 1) * p mod g.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& g);

// Exact quotient p / g when g divides p in Z[x], otherwise nullopt.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& g);

// Primitive gcd over Q via the subresultant remainder sequence; positive leading coefficient.
IntPoly primitive_gcd(const IntPoly& p, const IntPoly& q);

// Primitive squarefree part p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

// x^deg(p) p(1/x)
IntPoly reciprocal(const IntPoly& p);

// Sign of p(r) computed without forming rationals.
int sign_at(const IntPoly& p, const mpq_class& r);

// Integer upper bound strictly larger than the modulus of every complex root.
mpz_class cauchy_bound(const IntPoly& p);

RatPoly to_rational(const IntPoly& p);
// Scale a rational polynomial to a primitive integer one (same roots).
IntPoly clear_denominators(const RatPoly& p);

// Euclidean division over Q.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly make_monic(const RatPoly& p);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic, or zero

// p(x) * q(y) style helpers used by the root machinery.
IntPoly compose(const IntPoly& outer, const IntPoly& inner);

}  // namespace ampdyn::exactpoly
