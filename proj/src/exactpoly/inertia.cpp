#include "ampdyn/exactpoly/inertia.hpp"

#include "ampdyn/exactpoly/char_poly.hpp"

namespace ampdyn::exactpoly {

namespace {

int sign_variations(const IntPoly& p) {
  int count = 0, last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

bool is_symmetric(const RatMatrix& m) { return m.is_square() && m == m.transpose(); }

Inertia inertia(const RatMatrix& m) {
  if (!is_symmetric(m)) fail(ErrorKind::Domain, "inertia needs a symmetric matrix");
  const IntPoly p = char_poly(m);
  Inertia out;
  while (out.zero < static_cast<int>(p.coeffs().size()) && p.coeffs()[out.zero] == 0) ++out.zero;
  out.positive = sign_variations(p);
  out.negative = sign_variations(p.reflect());
  ensure(out.positive + out.negative + out.zero == static_cast<int>(m.rows()), "symmetric spectra are real");
  return out;
}

Inertia inertia(const IntMatrix& m) { return inertia(to_rational(m)); }

bool is_positive_semidefinite(const RatMatrix& m) { return inertia(m).negative == 0; }

bool is_positive_definite(const RatMatrix& m) {
  const Inertia i = inertia(m);
  return i.negative == 0 && i.zero == 0;
}

}  // namespace ampdyn::exactpoly
