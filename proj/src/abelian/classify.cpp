#include "ampdyn/abelian/classify.hpp"

#include "ampdyn/exactpoly/char_poly.hpp"
#include "ampdyn/exactpoly/cyclotomic.hpp"
#include "ampdyn/exactpoly/roots.hpp"
#include "ampdyn/exactpoly/sturm.hpp"

namespace ampdyn::abelian {

using namespace exactpoly;

const char* to_string(Entropy e) { return e == Entropy::Null ? "null" : "positive"; }

mpz_class degree(const EndoSpec& spec) { return spec.det() * spec.det(); }

namespace {

// For c(y) = E(y^2) + y O(y^2): E(x)^2 - x O(x)^2 vanishes at the squares of the roots of c.
IntPoly square_roots_poly(const IntPoly& c) {
  std::vector<mpz_class> even, odd;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) (i % 2 == 0 ? even : odd).push_back(c.coeffs()[i]);
  IntPoly e(even), o(odd);
  return e * e - IntPoly::x() * o * o;
}

// x^2 for a positive algebraic x, isolated against the carrier of the squares.
AlgebraicReal square(AlgebraicReal x) {
  const IntPoly carrier = square_roots_poly(x.min_poly);
  SturmSequence s(carrier);
  while (true) {
    if (x.lo >= 0 && s.count(x.lo * x.lo, x.hi * x.hi) == 1)
      return AlgebraicReal{s.squarefree(), x.lo * x.lo, x.hi * x.hi};
    x = refine(x, x.width() / 2);
  }
}

// Largest |real root| of p as a positive algebraic number, if p has a real root.
std::optional<AlgebraicReal> largest_abs_real_root(const IntPoly& p) {
  auto pos = largest_real_root(p);
  auto neg = largest_real_root(p.reflect());  // -(smallest root of p)
  std::optional<AlgebraicReal> best;
  for (auto& r : {pos, neg}) {
    if (!r || compare(*r, mpq_class(0)) <= 0) continue;
    if (!best || compare(*r, *best) > 0) best = r;
  }
  return best;
}

}  // namespace

SpectralRadius spectral_radius(const EndoSpec& spec) {
  const IntPoly p = exactpoly::char_poly(spec.matrix());
  auto n1 = largest_real_root(pair_product_polynomial(p));
  ensure(n1.has_value(), "|lambda|^2 is a real root of the pair-product polynomial");
  SpectralRadius out{*n1, std::nullopt};
  if (auto r = largest_abs_real_root(p); r && compare(square(*r), out.n1) == 0) out.rho = refine(*r, default_isolation_width());
  return out;
}

bool is_pcd_via_periods(const EndoSpec& spec) {
  const IntMatrix id = IntMatrix::identity(spec.n());
  for (unsigned long d : orders_with_phi_at_most(spec.n()))
    if (determinant(power(spec.matrix(), d) - id) == 0) return false;
  return true;
}

DynReport classify(const EndoSpec& spec) {
  DynReport r;
  r.n = spec.n();
  r.char_poly = exactpoly::char_poly(spec.matrix());
  r.degree = degree(spec);
  r.amplified = unit_circle_root_count(r.char_poly) == 0;
  r.pcd = cyclotomic_divisors(r.char_poly).empty();
  r.entropy = is_cyclotomic_product(r.char_poly) ? Entropy::Null : Entropy::Positive;
  r.spectral_radius = spectral_radius(spec);
  r.dense_orbit = r.pcd;

  ensure(!r.amplified || r.pcd, "amplified implies PCD");
  ensure(!r.pcd || r.entropy == Entropy::Positive, "PCD implies positive entropy");
  ensure(r.entropy == Entropy::Positive || r.degree == 1, "null entropy implies an automorphism");
  ensure((r.entropy == Entropy::Null) == (compare(r.spectral_radius.n1, mpq_class(1)) == 0),
         "null entropy iff unit spectral radius");
  return r;
}

}  // namespace ampdyn::abelian
