#include "ampdyn/hyperlattice/entropy.hpp"

#include <numeric>

#include "ampdyn/exactpoly/char_poly.hpp"
#include "ampdyn/exactpoly/cyclotomic.hpp"

namespace ampdyn::hyperlattice {

using namespace exactpoly;

const char* to_string(Entropy e) { return e == Entropy::Null ? "null" : "positive"; }

namespace {

AlgebraicReal unit_radius() { return *largest_real_root(IntPoly{-1, 1}); }

// Leading real eigenvalue of the non-cyclotomic carrier, as a root of that carrier.
AlgebraicReal leading_eigenvalue(const IntPoly& carrier) {
  auto pos = largest_real_root(carrier);
  auto neg = largest_real_root(carrier.reflect());
  if (pos && (!neg || compare(*pos, *neg) >= 0)) return *pos;
  ensure(neg.has_value(), "positive entropy isometries have a real leading eigenvalue");
  // -x for x the root of carrier(-t) in (lo, hi]; carrier has no rational roots here.
  return AlgebraicReal{carrier, -neg->hi, -neg->lo};
}

unsigned long cyclotomic_lcm(const IntPoly& p) {
  unsigned long l = 1;
  for (unsigned long d : cyclotomic_divisors(p)) l = std::lcm(l, d);
  return l;
}

RatMatrix restricted_form(const IntMatrix& gram, const std::vector<RatVector>& basis) {
  const RatMatrix q = to_rational(gram);
  RatMatrix out(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const RatVector qa = q * basis[a];
    for (std::size_t b = 0; b < basis.size(); ++b) out(a, b) = dot(qa, basis[b]);
  }
  return out;
}

}  // namespace

std::optional<RatVector> nonnegative_vector(const RatMatrix& a0) {
  const std::size_t n = a0.rows();
  if (n == 0) return std::nullopt;
  RatMatrix a = a0;
  RatMatrix basis = RatMatrix::identity(n);  // columns transform with a
  auto column = [&](std::size_t j) { return basis.col(j); };
  // Congruence diagonalization, tracking the change of basis.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: an off-diagonal entry gives a positive vector b_i +- b_j.
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            RatVector v = column(i), w = column(j);
            const int s = a(i, j) > 0 ? 1 : -1;
            for (std::size_t t = 0; t < n; ++t) v[t] += s * w[t];
            return v;
          }
      return column(k);  // the remaining block is zero: radical vectors
    }
    if (p != k) {
      for (std::size_t t = 0; t < n; ++t) std::swap(a(p, t), a(k, t));
      for (std::size_t t = 0; t < n; ++t) std::swap(a(t, p), a(t, k));
      for (std::size_t t = 0; t < n; ++t) std::swap(basis(t, p), basis(t, k));
    }
    if (a(k, k) > 0) return column(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const mpq_class f = a(i, k) / a(k, k);
      for (std::size_t t = 0; t < n; ++t) a(i, t) -= f * a(k, t);
      for (std::size_t t = 0; t < n; ++t) a(t, i) -= f * a(t, k);
      for (std::size_t t = 0; t < n; ++t) basis(t, i) -= f * basis(t, k);
    }
  }
  return std::nullopt;  // negative definite
}

EntropyReport entropy_class(const LatticeIsometry& iso) {
  EntropyReport r;
  r.char_poly = char_poly(iso.matrix());
  r.non_cyclotomic_part = strip_cyclotomic(r.char_poly).remainder;
  if (is_cyclotomic_product(r.char_poly)) {
    r.entropy = Entropy::Null;
    r.spectral_radius = unit_radius();
    return r;
  }
  r.entropy = Entropy::Positive;
  const AlgebraicReal lead = leading_eigenvalue(squarefree_part(r.non_cyclotomic_part));
  r.spectral_radius = compare(lead, mpq_class(0)) > 0 ? lead : *largest_real_root(lead.min_poly.reflect());
  ensure(compare(r.spectral_radius, mpq_class(1)) > 0, "positive entropy iff spectral radius > 1");
  r.salem = salem_check(r.non_cyclotomic_part);
  return r;
}

std::optional<IntVector> fixed_positive_cone_vector(const LatticeIsometry& iso, unsigned long k) {
  const IntMatrix gk = power(iso.matrix(), k);
  const auto kernel = kernel_basis(to_rational(gk - IntMatrix::identity(gk.rows())));
  if (kernel.empty()) return std::nullopt;
  auto w = nonnegative_vector(restricted_form(iso.lattice().gram(), kernel));
  if (!w) return std::nullopt;
  RatVector v(gk.rows(), mpq_class(0));
  for (std::size_t b = 0; b < kernel.size(); ++b)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += (*w)[b] * kernel[b][i];
  IntVector out = primitive_integer(v);
  const QuadLattice& l = iso.lattice();
  if (l.pair(out, l.reference()) < 0)
    for (auto& x : out) x = -x;
  ensure(l.q(out) >= 0 && l.pair(out, l.reference()) > 0, "nonzero q >= 0 vectors pair positively with h");
  return out;
}

NullFixedWitness null_fixed_witness(const LatticeIsometry& iso) {
  const EntropyReport r = entropy_class(iso);
  if (r.entropy != Entropy::Null) fail(ErrorKind::PreconditionViolated, "null_fixed_witness needs null entropy");
  const unsigned long bound = cyclotomic_lcm(r.char_poly);
  for (unsigned long k = 1; k <= bound; ++k) {
    if (auto v = fixed_positive_cone_vector(iso, k)) return NullFixedWitness{k, *v, iso.lattice().q(*v)};
  }
  fail(ErrorKind::NoneInPositiveCone, "no fixed vector of any power lies in the closed positive cone");
}

PositiveEntropyWitness positive_entropy_witness(const LatticeIsometry& iso, int max_degree) {
  const EntropyReport r = entropy_class(iso);
  if (r.entropy != Entropy::Positive) fail(ErrorKind::PreconditionViolated, "positive_entropy_witness needs positive entropy");
  const IntPoly carrier = squarefree_part(r.non_cyclotomic_part);
  if (carrier.degree() > max_degree)
    fail(ErrorKind::FieldTooLarge, "eigenvalue field degree " + std::to_string(carrier.degree()) + " exceeds " +
                                       std::to_string(max_degree));
  const AlgebraicReal lead = leading_eigenvalue(carrier);
  const IntMatrix& g = iso.matrix();
  const QuadLattice& lat = iso.lattice();
  const std::size_t n = g.rows();

  return with_splitting(NumberField(lead), [&](const NumberField& k) {
    const RatPoly theta = k.generator();
    const RatPoly inv = k.inverse(theta);
    auto eigenvector = [&](const RatPoly& value) {
      FieldMatrix m(n, FieldVector(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m[i][j] = k.reduce(RatPoly::constant(mpq_class(g(i, j))) - (i == j ? value : RatPoly()));
      auto basis = kernel_basis(k, m);
      ensure(basis.size() == 1, "the leading eigenvalue is simple");
      return basis.front();
    };
    const auto gram = [&] {
      std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = lat.gram()(i, j);
      return out;
    }();
    FieldVector h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = RatPoly::constant(mpq_class(lat.reference()[i]));
    auto normalize = [&](FieldVector v) {
      const RatPoly s = bilinear(k, v, gram, h);
      ensure(!k.is_zero(s), "isotropic eigenvectors pair nonzero with h");
      const RatPoly scale = k.mul(RatPoly::constant(2), k.inverse(s));
      for (auto& x : v) x = k.mul(x, scale);
      return v;
    };
    PositiveEntropyWitness w;
    w.eigenvalue = k.embedding();
    w.d1 = normalize(eigenvector(theta));
    w.d2 = normalize(eigenvector(inv));
    w.d.resize(n);
    FieldVector sum(n);
    for (std::size_t i = 0; i < n; ++i) {
      w.d[i] = k.sub(w.d1[i], w.d2[i]);
      sum[i] = k.add(w.d1[i], w.d2[i]);
    }
    w.q11 = bilinear(k, w.d1, gram, w.d1);
    w.q22 = bilinear(k, w.d2, gram, w.d2);
    w.q12 = bilinear(k, w.d1, gram, w.d2);
    w.q_sum = bilinear(k, sum, gram, sum);
    ensure(k.is_zero(w.q11) && k.is_zero(w.q22), "leading eigenvectors are isotropic");
    ensure(k.sign(w.q12) > 0, "q(D1, D2) > 0");
    ensure(k.sign(w.q_sum) > 0, "q(D1 + D2) > 0");
    const AlgebraicReal fine = refine(k.embedding(), mpq_class(1, mpz_class(1) << 60));
    const mpq_class mid = (fine.lo + fine.hi) / 2;
    for (std::size_t i = 0; i < n; ++i) {
      w.d1_approx.push_back(w.d1[i].evaluate(mid).get_d());
      w.d2_approx.push_back(w.d2[i].evaluate(mid).get_d());
    }
    return w;
  });
}

std::optional<unsigned long> finite_order_test(const LatticeIsometry& iso) {
  const IntMatrix& g = iso.matrix();
  const IntPoly p = char_poly(g);
  const std::size_t n = g.rows();
  std::optional<unsigned long> order;
  // Semisimple with cyclotomic spectrum: the squarefree part annihilates g.
  if (is_cyclotomic_product(p) && evaluate(squarefree_part(p), g).is_zero()) {
    const unsigned long k = cyclotomic_lcm(p);
    ensure(power(g, k) == IntMatrix::identity(n), "g^k = I for k the lcm of the cyclotomic orders");
    for (unsigned long d = 1; d < k; ++d)
      if (k % d == 0) ensure(power(g, d) != IntMatrix::identity(n), "the order is exactly the lcm");
    order = k;
  }
  // A fixed vector with q > 0 forces finite order (g acts on its negative definite complement).
  const auto kernel = kernel_basis(to_rational(g - IntMatrix::identity(n)));
  if (!kernel.empty()) {
    auto w = nonnegative_vector(restricted_form(iso.lattice().gram(), kernel));
    if (w) {
      RatVector v(n, mpq_class(0));
      for (std::size_t b = 0; b < kernel.size(); ++b)
        for (std::size_t i = 0; i < n; ++i) v[i] += (*w)[b] * kernel[b][i];
      if (iso.lattice().pair(v, v) > 0) ensure(order.has_value(), "a fixed vector with q > 0 forces finite order");
    }
  }
  return order;
}

}  // namespace ampdyn::hyperlattice
