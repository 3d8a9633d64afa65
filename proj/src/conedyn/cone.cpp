#include "ampdyn/conedyn/cone.hpp"

#include <algorithm>
#include <numeric>

#include "ampdyn/conedyn/lp.hpp"

namespace ampdyn::conedyn {

namespace {

RatMatrix generator_matrix(std::size_t dim, const std::vector<RatVector>& gens) {
  RatMatrix g(dim, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) g(i, j) = gens[j][i];
  return g;
}

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

// Rows A, then a final row of ones: A c = 0, sum c = 1.
std::pair<RatMatrix, RatVector> normalized_system(const RatMatrix& a) {
  RatMatrix sys(a.rows() + 1, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sys(i, j) = a(i, j);
  for (std::size_t j = 0; j < a.cols(); ++j) sys(a.rows(), j) = 1;
  RatVector rhs(a.rows() + 1, mpq_class(0));
  rhs.back() = 1;
  return {sys, rhs};
}

}  // namespace

bool same_ray(const RatVector& x, const RatVector& y) {
  if (x.size() != y.size() || is_zero_vector(x) || is_zero_vector(y)) return false;
  std::optional<mpq_class> ratio;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] == 0) != (y[i] == 0)) return false;
    if (x[i] == 0) continue;
    mpq_class r = y[i] / x[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio && *ratio > 0;
}

bool PolyCone::is_salient(std::size_t dim, const std::vector<RatVector>& generators) {
  // A line inside the cone means sum c_i g_i = 0 with c >= 0, sum c = 1.
  auto [sys, rhs] = normalized_system(generator_matrix(dim, generators));
  return !lp_feasible(sys, rhs).has_value();
}

PolyCone::PolyCone(std::size_t dim, std::vector<RatVector> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ == 0) fail(ErrorKind::Dimension, "cone dimension must be positive");
  if (generators_.empty()) fail(ErrorKind::Domain, "cone needs at least one generator");
  for (const auto& g : generators_) {
    if (g.size() != dim_) fail(ErrorKind::Dimension, "generator length differs from the cone dimension");
    if (is_zero_vector(g)) fail(ErrorKind::Domain, "zero generator");
  }
  if (!is_salient(dim_, generators_)) fail(ErrorKind::NotSalient, "cone contains a line");
}

PolyCone PolyCone::orthant(std::size_t dim) {
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVector e(dim, mpq_class(0));
    e[i] = 1;
    gens.push_back(e);
  }
  return PolyCone(dim, gens);
}

bool PolyCone::full_dimensional() const { return rank(generator_matrix(dim_, generators_)) == dim_; }

std::optional<RatVector> PolyCone::decompose(const RatVector& x) const {
  if (x.size() != dim_) fail(ErrorKind::Dimension, "point length differs from the cone dimension");
  return lp_feasible(generator_matrix(dim_, generators_), x);
}

bool PolyCone::contains(const RatVector& x) const { return decompose(x).has_value(); }

bool PolyCone::in_interior(const RatVector& x) const {
  if (!full_dimensional() || is_zero_vector(x) || !contains(x)) return false;
  return minimal_face(x).full_dimensional();
}

const std::vector<IntVector>& PolyCone::extremal_rays() const {
  if (rays_) return *rays_;
  // Deduplicate up to positive scaling, then drop generators in the cone of the others.
  std::vector<IntVector> prim;
  for (const auto& g : generators_) {
    IntVector p = primitive_integer(g);
    if (std::find(prim.begin(), prim.end(), p) == prim.end()) prim.push_back(p);
  }
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    std::vector<RatVector> others;
    for (std::size_t j = 0; j < prim.size(); ++j)
      if (j != i) others.push_back(to_rational(prim[j]));
    const bool redundant = !others.empty() && lp_feasible(generator_matrix(dim_, others), to_rational(prim[i]));
    if (!redundant) rays.push_back(prim[i]);
  }
  std::sort(rays.begin(), rays.end());
  rays_ = rays;
  return *rays_;
}

PolyCone PolyCone::minimal_face(const RatVector& x) const {
  if (is_zero_vector(x)) fail(ErrorKind::Domain, "minimal face of the zero vector");
  if (!contains(x)) fail(ErrorKind::Domain, "point is outside the cone");
  // The face is spanned by the rays that carry positive weight in some representation of x.
  const auto& rays = extremal_rays();
  std::vector<RatVector> rr;
  for (const auto& r : rays) rr.push_back(to_rational(r));
  const RatMatrix g = generator_matrix(dim_, rr);
  std::vector<RatVector> face;
  for (std::size_t i = 0; i < rr.size(); ++i) {
    RatVector cost(rr.size(), mpq_class(0));
    cost[i] = -1;
    LpResult res = lp_minimize(g, x, cost);
    ensure(res.status == LpResult::Status::Optimal, "bounded in a salient cone");
    if (res.value < 0) face.push_back(rr[i]);
  }
  return PolyCone(dim_, face);
}

ConeEndo::ConeEndo(RatMatrix matrix, PolyCone cone, Invariance mode)
    : matrix_(std::move(matrix)), cone_(std::move(cone)), mode_(mode) {
  if (!matrix_.is_square() || matrix_.rows() != cone_.dim())
    fail(ErrorKind::Dimension, "map size differs from the cone dimension");
  auto inv = inverse(matrix_);
  if (!inv) fail(ErrorKind::Domain, "cone map must be invertible");
  for (const auto& g : cone_.generators())
    if (!cone_.contains(matrix_ * g)) fail(ErrorKind::NotInvariant, "a generator leaves the cone under phi");
  if (mode_ == Invariance::Exact)
    for (const auto& g : cone_.generators())
      if (!cone_.contains(*inv * g)) fail(ErrorKind::NotInvariant, "a generator leaves the cone under phi^-1");
}

ConeEndo ConeEndo::power(unsigned long k) const { return ConeEndo(ampdyn::power(matrix_, k), cone_, mode_); }

RayPermutation ray_permutation(const ConeEndo& e) {
  if (e.mode() != Invariance::Exact) fail(ErrorKind::Unsupported, "ray permutation needs phi(C) = C");
  RayPermutation out;
  out.rays = e.cone().extremal_rays();
  const std::size_t m = out.rays.size();
  out.image.assign(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const RatVector img = e.matrix() * to_rational(out.rays[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (same_ray(to_rational(out.rays[j]), img)) out.image[i] = j;
    ensure(out.image[i] < m, "phi maps extremal rays to extremal rays");
  }
  // Order = lcm of cycle lengths.
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    unsigned long len = 0;
    for (std::size_t j = i; !seen[j]; j = out.image[j]) seen[j] = true, ++len;
    out.order = std::lcm(out.order, len);
  }
  return out;
}

std::optional<RatVector> fixed_cone_point(const ConeEndo& e) {
  const std::size_t d = e.dim();
  const auto kernel = kernel_basis(e.matrix() - RatMatrix::identity(d));
  if (kernel.empty()) return std::nullopt;
  // G c - K t+ + K t- = 0, sum c = 1.
  const auto& gens = e.cone().generators();
  const std::size_t ng = gens.size(), nk = kernel.size();
  RatMatrix a(d, ng + 2 * nk);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < ng; ++j) a(i, j) = gens[j][i];
    for (std::size_t j = 0; j < nk; ++j) {
      a(i, ng + j) = -kernel[j][i];
      a(i, ng + nk + j) = kernel[j][i];
    }
  }
  RatMatrix sys(d + 1, a.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sys(i, j) = a(i, j);
  for (std::size_t j = 0; j < ng; ++j) sys(d, j) = 1;
  RatVector rhs(d + 1, mpq_class(0));
  rhs[d] = 1;
  auto sol = lp_feasible(sys, rhs);
  if (!sol) return std::nullopt;
  RatVector x(d, mpq_class(0));
  for (std::size_t j = 0; j < ng; ++j)
    for (std::size_t i = 0; i < d; ++i) x[i] += (*sol)[j] * gens[j][i];
  ensure(e.matrix() * x == x, "LP point is fixed");
  return x;
}

bool amplified_test(const ConeEndo& e) { return !fixed_cone_point(e).has_value(); }

Contraction contract(const ConeEndo& e, const RatVector& ray) {
  const std::size_t d = e.dim();
  if (ray.size() != d) fail(ErrorKind::Dimension, "ray length differs from the cone dimension");
  const RatVector img = e.matrix() * ray;
  if (!same_ray(ray, img)) fail(ErrorKind::NotInvariant, "phi does not fix the ray");
  const IntVector prim = primitive_integer(ray);
  const auto& rays = e.cone().extremal_rays();
  if (std::find(rays.begin(), rays.end(), prim) == rays.end())
    fail(ErrorKind::Domain, "ray is not extremal in the cone");
  if (d == 1) fail(ErrorKind::NotContractible, "contracting the only ray leaves a zero-dimensional space");

  const RatVector r = to_rational(prim);
  std::size_t p = 0;
  while (r[p] == 0) ++p;
  // q(x) = x - (x_p / r_p) r with coordinate p dropped.
  RatMatrix q(d - 1, d), s(d, d - 1);
  for (std::size_t i = 0, row = 0; i < d; ++i) {
    if (i == p) continue;
    q(row, i) = 1;
    q(row, p) = -r[i] / r[p];
    s(i, row) = 1;
    ++row;
  }
  std::vector<RatVector> gens;
  for (const auto& g : e.cone().generators()) {
    RatVector qg = q * g;
    if (!is_zero_vector(qg)) gens.push_back(std::move(qg));
  }
  if (gens.empty() || !PolyCone::is_salient(d - 1, gens))
    fail(ErrorKind::NotContractible, "the quotient cone contains a line");
  const RatMatrix induced = q * e.matrix() * s;
  ensure(induced * q == q * e.matrix(), "phi descends to the quotient");
  return Contraction{prim, img[p] / ray[p], q, s, ConeEndo(induced, PolyCone(d - 1, gens), e.mode())};
}

}  // namespace ampdyn::conedyn
