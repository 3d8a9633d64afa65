#pragma once

#include <optional>

#include "ampdyn/core/matrix.hpp"

namespace ampdyn::conedyn {

// Finitely generated cone {sum c_i g_i : c_i >= 0} in Q^dim; salient by construction.
class PolyCone {
 public:
  PolyCone(std::size_t dim, std::vector<RatVector> generators);

  static bool is_salient(std::size_t dim, const std::vector<RatVector>& generators);
  static PolyCone orthant(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<RatVector>& generators() const noexcept { return generators_; }
  bool full_dimensional() const;

  bool contains(const RatVector& x) const;
  // Nonnegative coefficients c with sum c_i g_i = x.
  std::optional<RatVector> decompose(const RatVector& x) const;
  // Topological interior (requires a full-dimensional cone).
  bool in_interior(const RatVector& x) const;

  // Primitive integer representatives of the extremal rays, sorted lexicographically.
  const std::vector<IntVector>& extremal_rays() const;

  // Smallest face containing x; x lies in its relative interior.
  PolyCone minimal_face(const RatVector& x) const;

 private:
  std::size_t dim_;
  std::vector<RatVector> generators_;
  mutable std::optional<std::vector<IntVector>> rays_;
};

// Positive multiple test: y = c x with c > 0.
bool same_ray(const RatVector& x, const RatVector& y);

enum class Invariance {
  Exact,    // phi(C) = C: phi and its inverse map generators into C
  Forward,  // phi(C) contained in C
};

class ConeEndo {
 public:
  ConeEndo(RatMatrix matrix, PolyCone cone, Invariance mode = Invariance::Exact);

  const RatMatrix& matrix() const noexcept { return matrix_; }
  const PolyCone& cone() const noexcept { return cone_; }
  Invariance mode() const noexcept { return mode_; }
  std::size_t dim() const noexcept { return cone_.dim(); }

  ConeEndo power(unsigned long k) const;

 private:
  RatMatrix matrix_;
  PolyCone cone_;
  Invariance mode_;
};

struct RayPermutation {
  std::vector<IntVector> rays;
  std::vector<std::size_t> image;  // phi(rays[i]) spans rays[image[i]]
  unsigned long order = 1;
};

RayPermutation ray_permutation(const ConeEndo& e);

// ker(phi - id) meets C only in 0.
bool amplified_test(const ConeEndo& e);
// A nonzero point of ker(phi - id) in C, if any.
std::optional<RatVector> fixed_cone_point(const ConeEndo& e);

struct Contraction {
  IntVector ray;
  mpq_class eigenvalue;  // phi(ray) = eigenvalue * ray
  RatMatrix quotient;    // (d-1) x d, kernel span(ray)
  RatMatrix section;     // d x (d-1), quotient * section = id
  ConeEndo result;
};

// Quotient of the ambient space by an invariant extremal ray.
Contraction contract(const ConeEndo& e, const RatVector& ray);

}  // namespace ampdyn::conedyn
