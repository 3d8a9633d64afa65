#include "ampdyn/exactpoly/number_field.hpp"

#include "ampdyn/exactpoly/sturm.hpp"

namespace ampdyn::exactpoly {

NumberField::NumberField(const AlgebraicReal& embedding)
    : modulus_(make_monic(to_rational(embedding.min_poly))), embedding_(embedding) {
  if (modulus_.degree() < 1) fail(ErrorKind::Domain, "number field modulus must have degree >= 1");
}

RatPoly NumberField::reduce(const RatPoly& a) const {
  if (a.degree() < modulus_.degree()) return a;
  return divmod(a, modulus_).second;
}

RatPoly NumberField::mul(const RatPoly& a, const RatPoly& b) const { return reduce(a * b); }

namespace {

// Which factor of the modulus vanishes at the embedded root.
bool vanishes_at(const RatPoly& f, const AlgebraicReal& root) {
  IntPoly fi = clear_denominators(f);
  if (fi.degree() < 1) return false;
  return SturmSequence(fi).count(root.lo, root.hi) >= 1;
}

}  // namespace

bool NumberField::is_zero(const RatPoly& a) const {
  RatPoly r = reduce(a);
  if (r.is_zero()) return true;
  RatPoly g = gcd(r, modulus_);
  if (g.degree() < 1) return false;
  throw ZeroDivisorFound(g);
}

RatPoly NumberField::inverse(const RatPoly& a) const {
  RatPoly r = reduce(a);
  if (r.is_zero()) fail(ErrorKind::Domain, "inverse of zero in a number field");
  // Extended Euclid: s*r + t*m = g.
  RatPoly old_r = modulus_, cur_r = r;
  RatPoly old_s, cur_s = RatPoly::constant(1);
  while (!cur_r.is_zero()) {
    auto [q, rem] = divmod(old_r, cur_r);
    RatPoly next_s = old_s - q * cur_s;
    old_r = std::move(cur_r);
    cur_r = std::move(rem);
    old_s = std::move(cur_s);
    cur_s = std::move(next_s);
  }
  if (old_r.degree() >= 1) throw ZeroDivisorFound(make_monic(old_r));
  return reduce(old_s * (1 / old_r.leading()));
}

int NumberField::sign(const RatPoly& a) const {
  RatPoly r = reduce(a);
  if (r.is_zero()) return 0;
  return sign_of(r, embedding_);
}

NumberField NumberField::split(const RatPoly& factor) const {
  RatPoly f = make_monic(factor);
  if (f.degree() < 1 || f.degree() >= modulus_.degree())
    fail(ErrorKind::Internal, "split needs a proper factor of the modulus");
  RatPoly other = divmod(modulus_, f).first;
  RatPoly keep = vanishes_at(f, embedding_) ? f : other;
  ensure(vanishes_at(keep, embedding_), "one factor carries the embedded root");
  AlgebraicReal e = embedding_;
  e.min_poly = clear_denominators(keep);
  return NumberField(e);
}

std::vector<FieldVector> kernel_basis(const NumberField& k, FieldMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && k.is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    RatPoly inv = k.inverse(a[r][c]);
    for (std::size_t j = 0; j < cols; ++j) a[r][j] = k.mul(a[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || k.is_zero(a[i][c])) continue;
      RatPoly f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = k.sub(a[i][j], k.mul(f, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<FieldVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(cols);
    v[free] = RatPoly::constant(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldVector mat_vec(const NumberField& k, const FieldMatrix& m, const FieldVector& v) {
  FieldVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    RatPoly acc;
    for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    out[i] = k.reduce(acc);
  }
  return out;
}

RatPoly bilinear(const NumberField& k, const FieldVector& a, const std::vector<std::vector<mpq_class>>& gram,
                 const FieldVector& b) {
  RatPoly acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatPoly row;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (gram[i][j] != 0) row += b[j] * gram[i][j];
    acc += a[i] * k.reduce(row);
  }
  return k.reduce(acc);
}

RatPoly substitute(const NumberField& k, const RatPoly& a, const RatPoly& image) {
  RatPoly acc;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = k.mul(acc, image) + RatPoly::constant(a.coeffs()[i]);
  return k.reduce(acc);
}

}  // namespace ampdyn::exactpoly
