#include "ampdyn/exactpoly/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "ampdyn/core/matrix.hpp"

namespace ampdyn::exactpoly {

namespace {

std::string coeff_str(const mpz_class& c) { return c.get_str(); }
std::string coeff_str(const mpq_class& c) { return ampdyn::to_string(c); }

}  // namespace

template <class T>
std::string Poly<T>::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const T& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << coeff_str(mag);
    if (i >= 1) {
      if (mag != 1) out << '*';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

template class Poly<mpz_class>;
template class Poly<mpq_class>;

IntPoly pow(const IntPoly& p, unsigned k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& g) {
  if (g.is_zero()) fail(ErrorKind::Domain, "pseudo-remainder by the zero polynomial");
  std::vector<mpz_class> r = p.coeffs();
  const int dg = g.degree();
  const mpz_class& lc = g.leading();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = std::max(p.degree() - dg + 1, 0);
  while (dr >= dg && dr >= 0) {
    mpz_class lead = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lc;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(dr - dg + i)] -= lead * g.coeffs()[static_cast<std::size_t>(i)];
    --steps;
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  // Normalize to exactly lc^(deg p - deg g + 1) even when leading terms cancelled early.
  for (; steps > 0; --steps)
    for (auto& c : r) c *= lc;
  return IntPoly(std::move(r));
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& g) {
  if (g.is_zero()) fail(ErrorKind::Domain, "division by the zero polynomial");
  if (p.is_zero()) return IntPoly();
  if (p.degree() < g.degree()) return std::nullopt;
  std::vector<mpz_class> r = p.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<mpz_class> q(r.size() - dg, mpz_class(0));
  const mpz_class& lc = g.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    q[k] = t;
    for (std::size_t i = 0; i <= dg; ++i) r[k + i] -= t * g.coeffs()[i];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly primitive_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) fail(ErrorKind::Domain, "gcd of two zero polynomials");
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly::constant(1);

  // Subresultant PRS (Collins, Brown).
  mpz_class g = 1;
  mpz_class h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly::constant(1);
    mpz_class divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    std::vector<mpz_class> rc = r.coeffs();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = IntPoly(std::move(rc));
    g = a.leading();
    // h <- g^delta / h^(delta-1)
    if (delta == 0) {
      // h unchanged
    } else {
      mpz_class num = 1;
      for (int i = 0; i < delta; ++i) num *= g;
      mpz_class den = 1;
      for (int i = 0; i + 1 < delta; ++i) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return primitive_part(b);
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "squarefree part of the zero polynomial");
  IntPoly pp = primitive_part(p);
  if (pp.degree() <= 0) return pp;
  IntPoly g = primitive_gcd(pp, pp.derivative());
  auto q = divide_exact(pp, g);
  ensure(q.has_value(), "gcd divides its argument");
  return primitive_part(*q);
}

IntPoly reciprocal(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "reciprocal of the zero polynomial");
  std::vector<mpz_class> v(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(v));
}

int sign_at(const IntPoly& p, const mpq_class& r) {
  if (p.is_zero()) return 0;
  mpq_class rc = r;
  rc.canonicalize();
  const mpz_class& a = rc.get_num();
  const mpz_class& b = rc.get_den();
  const auto& c = p.coeffs();
  mpz_class acc = c.back();
  mpz_class bpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + c[i] * bpow;
  }
  return sgn(acc);
}

mpz_class cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  mpz_class lc = abs(p.leading());
  mpz_class m = 0;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    mpz_class a = abs(p.coeffs()[i]);
    if (a > m) m = a;
  }
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
  return q + 2;
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<mpq_class> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

IntPoly clear_denominators(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  IntVector v = primitive_integer(p.coeffs());
  return primitive_part(IntPoly(std::move(v)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(ErrorKind::Domain, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<mpq_class> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<mpq_class> q(r.size() - db, mpq_class(0));
  mpq_class inv = 1 / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    if (r[k + db] == 0) continue;
    mpq_class t = r[k + db] * inv;
    q[k] = t;
    for (std::size_t i = 0; i <= db; ++i) r[k + i] -= t * b.coeffs()[i];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  mpq_class inv = 1 / p.leading();
  return p * inv;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
  IntPoly acc;
  for (std::size_t i = outer.coeffs().size(); i-- > 0;) acc = acc * inner + IntPoly::constant(outer.coeffs()[i]);
  return acc;
}

}  // namespace ampdyn::exactpoly
