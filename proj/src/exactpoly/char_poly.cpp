#include "ampdyn/exactpoly/char_poly.hpp"

namespace ampdyn::exactpoly {

RatPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  if (xs.size() != ys.size()) fail(ErrorKind::Dimension, "interpolation node/value mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<mpq_class> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  RatPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    // acc = acc * (x - xs[i]) + dd[i]
    acc = acc * RatPoly(std::vector<mpq_class>{mpq_class(-xs[i]), mpq_class(1)}) +
          RatPoly::constant(dd[i]);
  }
  return acc;
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) fail(ErrorKind::Dimension, "char_poly needs a nonempty square matrix");
  const std::size_t n = m.rows();
  std::vector<mpq_class> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = -m(i, j);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<unsigned long>(k);
    xs.emplace_back(static_cast<unsigned long>(k));
    ys.emplace_back(determinant(a));
  }
  RatPoly r = interpolate(xs, ys);
  std::vector<mpz_class> c;
  for (const auto& q : r.coeffs()) {
    ensure(q.get_den() == 1, "integer matrix has an integer characteristic polynomial");
    c.push_back(q.get_num());
  }
  IntPoly p(std::move(c));
  ensure(p.degree() == static_cast<int>(n) && p.is_monic(), "characteristic polynomial is monic of degree n");
  return p;
}

IntPoly char_poly(const RatMatrix& m) {
  if (!m.is_square() || m.rows() == 0) fail(ErrorKind::Dimension, "char_poly needs a nonempty square matrix");
  const std::size_t n = m.rows();
  std::vector<mpq_class> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = -m(i, j);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<unsigned long>(k);
    xs.emplace_back(static_cast<unsigned long>(k));
    ys.emplace_back(determinant(a));
  }
  return clear_denominators(interpolate(xs, ys));
}

IntMatrix companion(const IntPoly& p) {
  if (!p.is_monic() || p.degree() < 1) fail(ErrorKind::Domain, "companion matrix needs a monic polynomial of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[i];
  return c;
}

IntMatrix evaluate(const IntPoly& p, const IntMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::Dimension, "polynomial of a non-square matrix");
  IntMatrix acc(m.rows(), m.cols());
  const IntMatrix id = IntMatrix::identity(m.rows());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + id * p.coeffs()[i];
  return acc;
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  if (m + n == 0) return 1;
  IntMatrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = a.coeffs()[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = b.coeffs()[n - j];
  return determinant(s);
}

IntPoly pair_product_polynomial(const IntPoly& p) {
  if (p.degree() < 1) fail(ErrorKind::Domain, "pair products need a polynomial of degree >= 1");
  if (p.coeffs()[0] == 0) fail(ErrorKind::Domain, "pair products need p(0) != 0");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::size_t out_degree = n * n;
  std::vector<mpq_class> xs, ys;
  for (std::size_t k = 0; k <= out_degree; ++k) {
    // y^n p(x/y) at x = k: coefficient of y^(n-i) is a_i k^i.
    std::vector<mpz_class> g(n + 1);
    mpz_class kp = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      g[n - i] = p.coeffs()[i] * kp;
      kp *= static_cast<unsigned long>(k);
    }
    // The y^n coefficient is a_0 != 0, so the formal degree is attained.
    xs.emplace_back(static_cast<unsigned long>(k));
    ys.emplace_back(resultant(p, IntPoly(std::move(g))));
  }
  return clear_denominators(interpolate(xs, ys));
}

}  // namespace ampdyn::exactpoly
