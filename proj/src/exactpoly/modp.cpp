#include "ampdyn/exactpoly/modp.hpp"

#include <algorithm>

namespace ampdyn::exactpoly {

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;  // ascending, trimmed

struct Fp {
  u64 p;
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }  // p < 2^32, so a * b fits
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly rem(FpPoly a, const FpPoly& b, const Fp& f) {
  const u64 inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 t = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(t, b[i]));
    trim(a);
  }
  return a;
}

FpPoly quot(FpPoly a, const FpPoly& b, const Fp& f) {
  if (a.size() < b.size()) return {};
  FpPoly q(a.size() - b.size() + 1, 0);
  const u64 inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 t = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(t, b[i]));
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, const Fp& f) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(c);
  return rem(std::move(c), m, f);
}

FpPoly gcd(FpPoly a, FpPoly b, const Fp& f) {
  while (!b.empty()) {
    FpPoly r = rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

FpPoly powmod(FpPoly base, u64 e, const FpPoly& m, const Fp& f) {
  FpPoly r{1};
  base = rem(std::move(base), m, f);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, f);
    base = mulmod(base, base, m, f);
    e >>= 1;
  }
  return r;
}

FpPoly reduce(const IntPoly& p, std::uint32_t prime) {
  FpPoly out;
  mpz_class r;
  for (const auto& c : p.coeffs()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), prime);
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::vector<int>> factor_degrees_mod_prime(const IntPoly& p, std::uint32_t prime) {
  if (!is_prime(prime)) fail(ErrorKind::Domain, "factor_degrees_mod_prime needs a prime modulus");
  if (p.degree() < 1) fail(ErrorKind::Domain, "factor_degrees_mod_prime needs degree >= 1");
  const Fp f{prime};
  FpPoly a = reduce(p, prime);
  if (static_cast<int>(a.size()) - 1 != p.degree()) return std::nullopt;
  {
    const u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  FpPoly da;
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(f.mul(a[i], i % prime));
  trim(da);
  if (da.empty() || gcd(a, da, f).size() != 1) return std::nullopt;

  std::vector<int> degrees;
  FpPoly h{0, 1};  // x^(p^d) mod a
  for (int d = 1; 2 * d <= static_cast<int>(a.size()) - 1; ++d) {
    h = powmod(h, prime, a, f);
    FpPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = f.sub(hx[1], 1);
    trim(hx);
    FpPoly g = gcd(a, hx, f);
    if (g.size() > 1) {
      const int gd = static_cast<int>(g.size()) - 1;
      for (int k = 0; k < gd / d; ++k) degrees.push_back(d);
      a = quot(a, g, f);
      h = rem(h, a, f);
    }
  }
  if (a.size() > 1) degrees.push_back(static_cast<int>(a.size()) - 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

IrreducibilityEvidence certify_irreducible(const IntPoly& p, int max_primes) {
  IrreducibilityEvidence ev;
  const int n = p.degree();
  if (n < 1) fail(ErrorKind::Domain, "irreducibility of a constant");
  if (n == 1) {
    ev.certified = true;
    return ev;
  }
  if (content(p) != 1) return ev;  // non-unit content is a factor over Z
  if (n <= 3) {
    // Reducible iff there is a rational root a/b with a | p(0), b | lc.
    const mpz_class c0 = abs(p.coeffs().front());
    const mpz_class lc = abs(p.leading());
    if (c0 == 0) return ev;
    for (mpz_class a = 1; a <= c0; ++a) {
      if (!mpz_divisible_p(c0.get_mpz_t(), a.get_mpz_t())) continue;
      for (mpz_class b = 1; b <= lc; ++b) {
        if (!mpz_divisible_p(lc.get_mpz_t(), b.get_mpz_t())) continue;
        if (sign_at(p, mpq_class(a, b)) == 0 || sign_at(p, mpq_class(-a, b)) == 0) {
          ev.surviving_degrees = {1};
          return ev;
        }
      }
    }
    ev.certified = true;
    return ev;
  }
  // possible[d]: d is a sum of a sub-multiset of the factor degrees for every prime so far.
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  int used = 0;
  for (std::uint32_t q = 2; used < max_primes && q < 100000; ++q) {
    if (!is_prime(q)) continue;
    auto degs = factor_degrees_mod_prime(p, q);
    if (!degs) continue;
    ++used;
    ev.primes_used.push_back(q);
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (int d : *degs)
      for (int s = n; s >= d; --s)
        if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    bool any = false;
    for (int d = 1; d < n; ++d) {
      possible[static_cast<std::size_t>(d)] = possible[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
      any = any || possible[static_cast<std::size_t>(d)];
    }
    if (!any) {
      ev.certified = true;
      return ev;
    }
  }
  for (int d = 1; d < n; ++d)
    if (possible[static_cast<std::size_t>(d)]) ev.surviving_degrees.push_back(d);
  return ev;
}

}  // namespace ampdyn::exactpoly
