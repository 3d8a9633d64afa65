#include "ampdyn/exactpoly/roots.hpp"

#include "ampdyn/exactpoly/cyclotomic.hpp"
#include "ampdyn/exactpoly/sturm.hpp"

namespace ampdyn::exactpoly {

IntPoly trace_polynomial(const IntPoly& q) {
  if (q.is_zero() || q.degree() % 2 != 0) fail(ErrorKind::Domain, "trace polynomial needs even degree");
  if (reciprocal(q) != q) fail(ErrorKind::Domain, "trace polynomial needs a palindromic input");
  const std::size_t m = static_cast<std::size_t>(q.degree() / 2);
  // x^k + x^-k = P_k(y), P_0 = 2, P_1 = y, P_k = y P_{k-1} - P_{k-2}.
  IntPoly prev = IntPoly::constant(2);
  IntPoly cur = IntPoly::x();
  IntPoly r = IntPoly::constant(q.coeffs()[m]);
  for (std::size_t k = 1; k <= m; ++k) {
    r += cur * q.coeffs()[m + k];
    IntPoly next = IntPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return r;
}

IntPoly self_reciprocal_core(const IntPoly& p) {
  IntPoly s = squarefree_part(p);
  const IntPoly linear_factors[] = {IntPoly{0, 1}, IntPoly{-1, 1}, IntPoly{1, 1}};
  for (const auto& f : linear_factors)
    if (auto q = divide_exact(s, f)) s = std::move(*q);
  if (s.degree() < 1) return IntPoly::constant(1);
  IntPoly core = primitive_gcd(s, reciprocal(s));
  if (core.degree() < 1) return IntPoly::constant(1);
  // Roots come in pairs {z, 1/z} with z != +-1; an anti-palindromic core would vanish at 1.
  ensure(reciprocal(core) == core && core.degree() % 2 == 0, "self-reciprocal core is palindromic");
  return core;
}

int unit_circle_root_count(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "unit-circle count of the zero polynomial");
  int count = 0;
  if (sign_at(p, mpq_class(1)) == 0) ++count;
  if (sign_at(p, mpq_class(-1)) == 0) ++count;
  IntPoly core = self_reciprocal_core(p);
  if (core.degree() < 2) return count;
  IntPoly r = trace_polynomial(core);
  return count + 2 * sturm_count(r, mpq_class(-2), mpq_class(2));
}

int real_roots_greater_than_one(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "root count of the zero polynomial");
  if (p.degree() < 1) return 0;
  SturmSequence s(p);
  return s.count(mpq_class(1), mpq_class(cauchy_bound(p)));
}

bool is_reciprocal(const IntPoly& p) { return !p.is_zero() && reciprocal(p) == p; }

RootLocationSummary summarize_roots(const IntPoly& p) {
  RootLocationSummary s;
  s.degree = p.degree();
  s.distinct_unit_circle_roots = unit_circle_root_count(p);
  s.distinct_real_roots_gt_one = real_roots_greater_than_one(p);
  s.cyclotomic_divisors = cyclotomic_divisors(p);
  s.is_reciprocal = is_reciprocal(p);
  return s;
}

}  // namespace ampdyn::exactpoly
