#include "ampdyn/exactpoly/sturm.hpp"

namespace ampdyn::exactpoly {

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Domain, "Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() < 1) return;
  chain_.push_back(primitive_part(chain_.front().derivative()));
  while (chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^k * rem; flip when that factor is negative, then negate for the chain.
    const int k = a.degree() - b.degree() + 1;
    const bool factor_negative = b.leading() < 0 && (k % 2 == 1);
    IntPoly next = factor_negative ? r : -r;
    mpz_class c = content(next);
    std::vector<mpz_class> v = next.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    chain_.emplace_back(std::move(v));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const mpq_class& r) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, r));
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sgn(p.leading());
    if (p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmSequence::count(const mpq_class& a, const mpq_class& b) const {
  if (!(a < b)) fail(ErrorKind::Domain, "Sturm count needs a < b");
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_real() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

int sturm_count(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
  return SturmSequence(p).count(a, b);
}

}  // namespace ampdyn::exactpoly
