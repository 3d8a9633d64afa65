#include "ampdyn/exactpoly/algebraic.hpp"

#include <algorithm>

#include "ampdyn/core/matrix.hpp"
#include "ampdyn/exactpoly/sturm.hpp"

namespace ampdyn::exactpoly {

double AlgebraicReal::approx() const {
  mpq_class mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string AlgebraicReal::to_string() const {
  return "root of " + min_poly.to_string() + " in (" + ampdyn::to_string(lo) + ", " + ampdyn::to_string(hi) + "]";
}

mpq_class default_isolation_width() { return mpq_class(1, 1 << 20); }

namespace {

AlgebraicReal bisect(const SturmSequence& s, mpq_class lo, mpq_class hi, const mpq_class& width) {
  // Invariant: the target is the largest root of s in (lo, hi].
  while (s.count(lo, hi) > 1 || hi - lo > width) {
    mpq_class mid = (lo + hi) / 2;
    if (s.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return AlgebraicReal{s.squarefree(), lo, hi};
}

}  // namespace

std::optional<AlgebraicReal> largest_root_in(const IntPoly& p, const mpq_class& a, const mpq_class& b,
                                             const mpq_class& width) {
  if (p.degree() < 1) return std::nullopt;
  SturmSequence s(p);
  if (s.count(a, b) == 0) return std::nullopt;
  return normalize_integer(bisect(s, a, b, width));
}

std::optional<AlgebraicReal> largest_real_root(const IntPoly& p, const mpq_class& width) {
  if (p.degree() < 1) return std::nullopt;
  const mpq_class bound(cauchy_bound(p));
  return largest_root_in(p, -bound, bound, width);
}

AlgebraicReal refine(const AlgebraicReal& x, const mpq_class& width) {
  if (x.width() <= width) return x;
  SturmSequence s(x.min_poly);
  mpq_class lo = x.lo, hi = x.hi;
  while (hi - lo > width) {
    mpq_class mid = (lo + hi) / 2;
    if (s.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return AlgebraicReal{x.min_poly, lo, hi};
}

AlgebraicReal normalize_integer(const AlgebraicReal& x) {
  if (x.min_poly.degree() == 1) return x;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), x.hi.get_num_mpz_t(), x.hi.get_den_mpz_t());
  const mpq_class kq(k);
  if (kq > x.lo && kq <= x.hi && sign_at(x.min_poly, kq) == 0) {
    return AlgebraicReal{IntPoly(std::vector<mpz_class>{-k, 1}), x.lo, x.hi};
  }
  return x;
}

int compare(const AlgebraicReal& a, const mpq_class& r) {
  if (r <= a.lo) return 1;
  if (r > a.hi) return -1;
  // r in (lo, hi]: the root is in (lo, r] or (r, hi].
  const int s = sign_at(a.min_poly, r);
  if (s == 0) return 0;
  return SturmSequence(a.min_poly).count(a.lo, r) == 1 ? -1 : 1;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  const mpq_class lo = std::max(a.lo, b.lo);
  const mpq_class hi = std::min(a.hi, b.hi);
  if (lo < hi) {
    // Equal iff a common factor vanishes in the overlap.
    IntPoly g = primitive_gcd(a.min_poly, b.min_poly);
    if (g.degree() >= 1 && SturmSequence(g).count(lo, hi) >= 1) return 0;
  }
  AlgebraicReal x = a, y = b;
  while (true) {
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    x = refine(x, x.width() / 2);
    y = refine(y, y.width() / 2);
  }
}

int sign_of(const IntPoly& c, const AlgebraicReal& x) {
  if (c.is_zero()) return 0;
  if (c.degree() == 0) return sgn(c.leading());
  IntPoly g = primitive_gcd(c, x.min_poly);
  if (g.degree() >= 1 && SturmSequence(g).count(x.lo, x.hi) >= 1) return 0;
  SturmSequence sc(c);
  AlgebraicReal y = x;
  while (sc.count(y.lo, y.hi) > 0) y = refine(y, y.width() / 2);
  return sign_at(c, y.hi);
}

int sign_of(const RatPoly& c, const AlgebraicReal& x) {
  if (c.is_zero()) return 0;
  // clear_denominators normalizes the leading coefficient positive; undo that sign.
  IntPoly ic = clear_denominators(c);
  const int flip = (c.leading() > 0) ? 1 : -1;
  return flip * sign_of(ic, x);
}

}  // namespace ampdyn::exactpoly
