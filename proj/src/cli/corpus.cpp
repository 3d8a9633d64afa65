#include "ampdyn/cli/corpus.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "ampdyn/hyperlattice/lattice.hpp"

namespace ampdyn::cli {

namespace {

// Uniform draws without std::uniform_int_distribution, whose output is library-specific.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long operator()(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<RatVector> rows_of(const IntMatrix& m) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_rational(m.row(i)));
  return out;
}

std::vector<RatVector> rows_of(const RatMatrix& m) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

IntMatrix random_matrix(Draw& draw, std::size_t n, long lo, long hi) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = draw(lo, hi);
  return m;
}

IntMatrix default_gram(std::size_t rank) {
  IntMatrix g(rank, rank);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < rank; ++i) g(i, i) = rank == 2 ? -2 : -1;
  return g;
}

// Primitive v (first nonzero entry positive) with q(v) < 0 whose reflection is integral.
std::vector<IntVector> reflection_roots(const IntMatrix& gram, long r) {
  const std::size_t n = gram.rows();
  std::vector<IntVector> roots;
  IntVector v(n, mpz_class(-r));
  while (true) {
    std::size_t lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    mpz_class g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (lead < n && v[lead] > 0 && g == 1) {
      const IntVector qv = gram * v;
      mpz_class q = 0;
      for (std::size_t i = 0; i < n; ++i) q += v[i] * qv[i];
      bool integral = q < 0;
      for (std::size_t i = 0; integral && i < n; ++i) integral = mpz_class(2 * qv[i]) % q == 0;
      if (integral) roots.push_back(v);
    }
    std::size_t k = 0;
    while (k < n && v[k] == r) v[k++] = -r;
    if (k == n) break;
    ++v[k];
  }
  return roots;
}

// s_v(x) = x - 2 q(x, v) / q(v) v
IntMatrix reflection(const IntMatrix& gram, const IntVector& v) {
  const std::size_t n = gram.rows();
  const IntVector qv = gram * v;
  mpz_class q = 0;
  for (std::size_t i = 0; i < n; ++i) q += v[i] * qv[i];
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= mpz_class(2 * v[i] * qv[j]) / q;
  return s;
}

ProblemFile abelian_problem(Draw& draw, const CorpusSpec& spec) {
  while (true) {
    const IntMatrix m = random_matrix(draw, spec.dim, -spec.bound, spec.bound);
    if (determinant(m) == 0) continue;
    ProblemFile p;
    p.kind = ProblemKind::Abelian;
    p.rows = rows_of(m);
    return p;
  }
}

ProblemFile lattice_problem(Draw& draw, const IntMatrix& gram, const std::vector<IntVector>& roots) {
  IntMatrix g = IntMatrix::identity(gram.rows());
  const long factors = draw(1, 6);
  for (long i = 0; i < factors; ++i) g = g * reflection(gram, roots[static_cast<std::size_t>(draw(0, static_cast<long>(roots.size()) - 1))]);
  ProblemFile p;
  p.kind = ProblemKind::Lattice;
  p.rows = rows_of(g);
  p.gram = rows_of(gram);
  return p;
}

ProblemFile cone_problem(Draw& draw, const CorpusSpec& spec) {
  const std::size_t d = static_cast<std::size_t>(draw(2, static_cast<long>(spec.dim)));
  const long r = std::min(spec.bound, 2L);
  IntMatrix basis;
  do basis = random_matrix(draw, d, -1, r);
  while (determinant(basis) == 0);
  const std::size_t fixed = static_cast<std::size_t>(draw(1, static_cast<long>(d) - 1));

  // Fixed rays are permuted among themselves; the others are scaled by distinct factors.
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  for (std::size_t i = fixed; i-- > 1;) std::swap(perm[i], perm[static_cast<std::size_t>(draw(0, static_cast<long>(i)))]);
  std::vector<long> factors = {2, 3, 4, 5, 6};
  for (std::size_t i = factors.size(); i-- > 1;)
    std::swap(factors[i], factors[static_cast<std::size_t>(draw(0, static_cast<long>(i)))]);
  RatMatrix action(d, d);
  RatVector weights(d);
  for (std::size_t i = 0; i < d; ++i) {
    action(perm[i], i) = i < fixed ? 1 : factors[i - fixed];
    weights[i] = i < fixed ? 0 : draw(1, 3);
  }
  const RatMatrix p_mat = to_rational(basis);
  const RatMatrix p_inv = *inverse(p_mat);
  const RatMatrix phi = p_mat * action * p_inv;
  const RatVector big = p_inv.transpose() * weights;

  ProblemFile p;
  p.kind = ProblemKind::Cone;
  p.rows = rows_of(phi);
  for (std::size_t j = 0; j < d; ++j) p.generators.push_back(p_mat.col(j));
  p.big = to_rational(primitive_integer(big));
  RatVector start(d);
  for (const auto& g : p.generators)
    for (std::size_t i = 0; i < d; ++i) start[i] += g[i];
  p.start = start;
  return p;
}

ProblemFile poly_problem(Draw& draw, const CorpusSpec& spec) {
  const long degree = draw(1, static_cast<long>(spec.dim));
  std::vector<mpz_class> c;
  for (long i = 0; i < degree; ++i) c.emplace_back(draw(-spec.bound, spec.bound));
  c.emplace_back(1);
  ProblemFile p;
  p.kind = ProblemKind::Poly;
  p.poly = exactpoly::IntPoly(c);
  return p;
}

}  // namespace

std::vector<std::pair<std::string, ProblemFile>> generate_corpus(const CorpusSpec& spec) {
  if (spec.dim < 1 || spec.dim > 6) fail(ErrorKind::Domain, "corpus dimension must be in [1, 6]");
  if (spec.bound < 1 || spec.bound > 9) fail(ErrorKind::Domain, "corpus entry bound must be in [1, 9]");
  if ((spec.kind == ProblemKind::Lattice || spec.kind == ProblemKind::Cone) && spec.dim < 2)
    fail(ErrorKind::Domain, "lattice and cone corpora need dimension >= 2");
  Draw draw(spec.seed);
  IntMatrix gram;
  std::vector<IntVector> roots;
  if (spec.kind == ProblemKind::Lattice) {
    gram = spec.gram ? *spec.gram : default_gram(spec.dim);
    if (!hyperlattice::has_hyperbolic_signature(gram)) fail(ErrorKind::BadSignature, "corpus gram is not of signature (1, n-1)");
    roots = reflection_roots(gram, std::min(spec.bound, 3L));
    if (roots.empty()) fail(ErrorKind::Domain, "no integral reflections for this gram within the bound");
  }
  std::vector<std::pair<std::string, ProblemFile>> out;
  for (std::size_t i = 0; i < spec.count; ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "%s_%04zu.prob", to_string(spec.kind), i);
    switch (spec.kind) {
      case ProblemKind::Abelian: out.emplace_back(name, abelian_problem(draw, spec)); break;
      case ProblemKind::Lattice: out.emplace_back(name, lattice_problem(draw, gram, roots)); break;
      case ProblemKind::Cone: out.emplace_back(name, cone_problem(draw, spec)); break;
      case ProblemKind::Poly: out.emplace_back(name, poly_problem(draw, spec)); break;
    }
  }
  return out;
}

void write_corpus(const std::string& dir, const std::vector<std::pair<std::string, ProblemFile>>& corpus) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, problem] : corpus) {
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    out << serialize(problem);
    if (!out) fail(ErrorKind::Domain, "cannot write '" + name + "' in '" + dir + "'");
  }
}

}  // namespace ampdyn::cli
