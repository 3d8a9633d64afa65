#include "ampdyn/abelian/torsion.hpp"

#include <algorithm>

namespace ampdyn::abelian {

namespace {

IntMatrix shifted_power(const EndoSpec& spec, unsigned long m) {
  if (m == 0) fail(ErrorKind::Domain, "iterate must be positive");
  if (spec.has_translation())
    fail(ErrorKind::Unsupported, "fixed points of f = g + a depend on the choice of origin; strip the translation");
  return power(spec.matrix(), m) - IntMatrix::identity(spec.n());
}

}  // namespace

std::vector<mpz_class> smith_invariants(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block as pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) pr = i, pc = j;
    if (pr == rows) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pr, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pc));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) {
          for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(i, j));
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
            clean = false;
          }
    }
    diag.push_back(abs(a(t, t)));
  }
  diag.resize(std::min(rows, cols), mpz_class(0));
  return diag;
}

std::optional<mpz_class> fix_count(const EndoSpec& spec, unsigned long m) {
  mpz_class d = determinant(shifted_power(spec, m));
  if (d == 0) return std::nullopt;
  return d * d;
}

mpz_class torsion_fixed_count(const EndoSpec& spec, unsigned long m, const mpz_class& modulus) {
  if (modulus < 1) fail(ErrorKind::Domain, "torsion order must be positive");
  mpz_class kernel = 1;
  for (const auto& d : smith_invariants(shifted_power(spec, m))) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
    kernel *= g;
  }
  return kernel * kernel;
}

mpz_class torsion_fixed_count_bruteforce(const EndoSpec& spec, unsigned long m, unsigned long modulus) {
  if (modulus < 1) fail(ErrorKind::Domain, "torsion order must be positive");
  const IntMatrix a = shifted_power(spec, m);
  const std::size_t n = spec.n();
  mpz_class total = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) total *= modulus;
  if (total > 10'000'000) fail(ErrorKind::Unsupported, "A[N] too large for enumeration");
  std::vector<long> mat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), a(i, j).get_mpz_t(), modulus);
      mat[i * n + j] = r.get_si();
    }
  const long count = total.get_si();
  const long mod = static_cast<long>(modulus);
  long fixed = 0;
  std::vector<long> x(2 * n);
  for (long code = 0; code < count; ++code) {
    long c = code;
    for (auto& v : x) v = c % mod, c /= mod;
    bool ok = true;
    // M acts on the two tangent copies independently.
    for (std::size_t copy = 0; copy < 2 && ok; ++copy)
      for (std::size_t i = 0; i < n && ok; ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += mat[i * n + j] * x[copy * n + j];
        ok = acc % mod == 0;
      }
    if (ok) ++fixed;
  }
  return fixed;
}

}  // namespace ampdyn::abelian
