#include "ampdyn/exactpoly/cyclotomic.hpp"

namespace ampdyn::exactpoly {

unsigned long euler_phi(unsigned long d) {
  if (d == 0) fail(ErrorKind::Domain, "euler_phi(0)");
  unsigned long result = d;
  unsigned long n = d;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned long> orders_with_phi_at_most(unsigned long bound) {
  // phi(d) >= sqrt(d / 2), so d <= 2 bound^2.
  std::vector<unsigned long> out;
  const unsigned long limit = 2 * bound * bound + 2;
  for (unsigned long d = 1; d <= limit; ++d)
    if (euler_phi(d) <= bound) out.push_back(d);
  return out;
}

const IntPoly& CyclotomicTable::get(unsigned long d) {
  if (d == 0) fail(ErrorKind::Domain, "cyclotomic(0)");
  if (auto it = cache_.find(d); it != cache_.end()) return it->second;
  IntPoly p = IntPoly::monomial(1, d) - IntPoly::constant(1);
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = divide_exact(p, get(e));
    ensure(q.has_value(), "lower cyclotomic divides x^d - 1");
    p = std::move(*q);
  }
  return cache_.emplace(d, std::move(p)).first->second;
}

IntPoly cyclotomic(unsigned long d) {
  CyclotomicTable table;
  return table.get(d);
}

std::set<unsigned long> cyclotomic_divisors(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "cyclotomic divisors of the zero polynomial");
  std::set<unsigned long> out;
  if (p.degree() < 1) return out;
  CyclotomicTable table;
  for (unsigned long d : orders_with_phi_at_most(static_cast<unsigned long>(p.degree())))
    if (divide_exact(p, table.get(d))) out.insert(d);
  return out;
}

CyclotomicSplit strip_cyclotomic(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "cyclotomic split of the zero polynomial");
  CyclotomicSplit split{p, {}};
  if (p.degree() < 1) return split;
  CyclotomicTable table;
  for (unsigned long d : orders_with_phi_at_most(static_cast<unsigned long>(p.degree()))) {
    if (euler_phi(d) > static_cast<unsigned long>(std::max(split.remainder.degree(), 0))) continue;
    unsigned mult = 0;
    while (auto q = divide_exact(split.remainder, table.get(d))) {
      split.remainder = std::move(*q);
      ++mult;
    }
    if (mult > 0) split.factors.emplace_back(d, mult);
  }
  return split;
}

bool is_cyclotomic_product(const IntPoly& p) {
  if (!p.is_monic()) fail(ErrorKind::Domain, "is_cyclotomic_product needs a monic polynomial");
  return strip_cyclotomic(p).remainder == IntPoly::constant(1);
}

}  // namespace ampdyn::exactpoly
