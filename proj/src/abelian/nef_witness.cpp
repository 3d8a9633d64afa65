#include "ampdyn/abelian/nef_witness.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "ampdyn/abelian/classify.hpp"
#include "ampdyn/exactpoly/char_poly.hpp"
#include "ampdyn/exactpoly/cyclotomic.hpp"
#include "ampdyn/exactpoly/inertia.hpp"
#include "ampdyn/exactpoly/roots.hpp"

namespace ampdyn::abelian {

using namespace exactpoly;

const char* to_string(FixedNefWitness::Status s) {
  switch (s) {
    case FixedNefWitness::Status::None: return "none";
    case FixedNefWitness::Status::Found: return "found";
    case FixedNefWitness::Status::SearchFailed: return "search-failed";
  }
  return "?";
}

mpq_class rationalize(double x, long max_den) {
  if (!std::isfinite(x)) fail(ErrorKind::Domain, "cannot rationalize a non-finite value");
  const bool neg = x < 0;
  double r = std::fabs(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(r);
    if (a > 1e15) break;
    const mpz_class ai(static_cast<long>(a));
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    const double frac = r - a;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return 0;
  mpq_class out(p1, q1);
  out.canonicalize();
  return neg ? mpq_class(-out) : out;
}

namespace {

// Coordinates on symmetric matrices: the upper triangle, row by row.
std::vector<std::pair<std::size_t, std::size_t>> sym_index(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
  return idx;
}

RatMatrix from_sym(const RatVector& v, std::size_t n) {
  RatMatrix s(n, n);
  const auto idx = sym_index(n);
  for (std::size_t k = 0; k < idx.size(); ++k) s(idx[k].first, idx[k].second) = s(idx[k].second, idx[k].first) = v[k];
  return s;
}

mpq_class frobenius(const RatMatrix& a, const RatMatrix& b) {
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * b(i, j);
  return acc;
}

// Frobenius-orthogonal projection of p onto the complement of span(basis).
RatMatrix project_out(const RatMatrix& p, const std::vector<RatMatrix>& basis) {
  const std::size_t k = basis.size();
  if (k == 0) return p;
  RatMatrix gram(k, k);
  RatVector rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    rhs[a] = frobenius(p, basis[a]);
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = frobenius(basis[a], basis[b]);
  }
  auto c = solve(gram, rhs);
  ensure(c.has_value(), "Gram matrix of a basis is invertible");
  RatMatrix out = p;
  for (std::size_t a = 0; a < k; ++a) out -= basis[a] * (*c)[a];
  return out;
}

// Re(conj(V) V^T) for the unit eigenvectors V of M: a positive definite form pairing to zero
// with every fixed class when no eigenvalue has modulus one.
std::optional<RatMatrix> eigen_separating_candidate(const IntMatrix& m) {
  const Eigen::Index n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j).get_d();
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) return std::nullopt;
  const Eigen::MatrixXcd v = es.eigenvectors();
  const Eigen::MatrixXd p = (v.conjugate() * v.transpose()).real();
  const double scale = p.cwiseAbs().maxCoeff();
  if (!(scale > 0)) return std::nullopt;
  RatMatrix out(m.rows(), m.rows());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      out(i, j) = out(j, i) = rationalize(p(i, j) / scale);
  return out;
}

FixedNefWitness amplified_certificate(const IntMatrix& m) {
  FixedNefWitness w;
  w.status = FixedNefWitness::Status::None;
  w.fixed_kernel = fixed_symmetric_kernel(m);
  std::vector<RatMatrix> candidates;
  if (auto c = eigen_separating_candidate(m)) candidates.push_back(*c);
  candidates.push_back(RatMatrix::identity(m.rows()));
  for (const auto& c : candidates) {
    RatMatrix p = project_out(c, w.fixed_kernel);
    if (is_positive_definite(p)) {
      w.separating_form = p;
      return w;
    }
  }
  w.note = "no separating positive definite form found for the fixed kernel";
  return w;
}

// Algebraic witness for an eigenvalue z on the unit circle: with y = z + 1/z and a real
// vector a killed by T^2 - yT + 1 (T = M^T), b = Ta, the form [a b] H [a b]^T with
// H = [[1, -y/2], [-y/2, 1]] is invariant and PSD since |y| < 2.
std::optional<AlgebraicNefClass> unit_circle_witness(const IntMatrix& m, const IntPoly& char_poly) {
  const IntPoly core = self_reciprocal_core(char_poly);
  if (core.degree() < 2) return std::nullopt;
  const IntPoly trace_poly = trace_polynomial(core);
  auto y0 = largest_root_in(trace_poly, -2, 2);
  if (!y0) return std::nullopt;
  const std::size_t n = m.rows();
  const IntMatrix t = m.transpose();
  const IntMatrix t2 = t * t;

  return with_splitting(NumberField(*y0), [&](const NumberField& k) -> std::optional<AlgebraicNefClass> {
    const RatPoly y = k.generator();
    FieldMatrix op(n, FieldVector(n));
    FieldMatrix tf(n, FieldVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        tf[i][j] = RatPoly::constant(mpq_class(t(i, j)));
        op[i][j] = k.reduce(RatPoly::constant(mpq_class(t2(i, j) + (i == j ? 1 : 0))) - y * mpq_class(t(i, j)));
      }
    auto kernel = kernel_basis(k, op);
    if (kernel.empty()) return std::nullopt;
    const FieldVector& a = kernel.front();
    const FieldVector b = mat_vec(k, tf, a);
    const RatPoly half_y = y * mpq_class(1, 2);
    const RatPoly c = k.sub(RatPoly::constant(1), k.mul(half_y, half_y));
    if (k.sign(c) <= 0) return std::nullopt;
    FieldVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = k.sub(a[i], k.mul(half_y, b[i]));
    FieldMatrix s(n, FieldVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i][j] = k.add(k.mul(u[i], u[j]), k.mul(c, k.mul(b[i], b[j])));

    // Exact invariance: T S T^T = S.
    FieldMatrix ts(n, FieldVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        RatPoly acc;
        for (std::size_t l = 0; l < n; ++l)
          if (t(i, l) != 0) acc += s[l][j] * mpq_class(t(i, l));
        ts[i][j] = k.reduce(acc);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        RatPoly acc;
        for (std::size_t l = 0; l < n; ++l)
          if (t(j, l) != 0) acc += ts[i][l] * mpq_class(t(j, l));
        if (!k.is_zero(k.sub(acc, s[i][j]))) return std::nullopt;
      }
    bool nonzero = false;
    for (std::size_t i = 0; i < n && !nonzero; ++i) nonzero = k.sign(s[i][i]) > 0;
    if (!nonzero) return std::nullopt;
    return AlgebraicNefClass{k.embedding(), std::move(s)};
  });
}

}  // namespace

RatMatrix AlgebraicNefClass::approx(int bits) const {
  const AlgebraicReal y = refine(trace, mpq_class(1) / (mpz_class(1) << bits));
  const mpq_class mid = (y.lo + y.hi) / 2;
  RatMatrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) out(i, j) = entries[i][j].evaluate(mid);
  return out;
}

bool is_fixed_class(const IntMatrix& m, const RatMatrix& s) {
  const RatMatrix q = to_rational(m);
  return q.transpose() * s * q == s;
}

std::vector<RatMatrix> fixed_symmetric_kernel(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const auto idx = sym_index(n);
  const RatMatrix q = to_rational(m);
  RatMatrix op(idx.size(), idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    RatVector e(idx.size(), mpq_class(0));
    e[k] = 1;
    const RatMatrix s = from_sym(e, n);
    const RatMatrix image = q.transpose() * s * q - s;
    for (std::size_t r = 0; r < idx.size(); ++r) op(r, k) = image(idx[r].first, idx[r].second);
  }
  std::vector<RatMatrix> out;
  for (const auto& v : kernel_basis(op)) out.push_back(from_sym(v, n));
  return out;
}

std::optional<IntMatrix> pcd_nef_witness(const EndoSpec& spec) {
  const IntMatrix& m = spec.matrix();
  const IntPoly p = exactpoly::char_poly(m);
  const auto divisors = cyclotomic_divisors(p);
  if (divisors.empty()) return std::nullopt;
  const unsigned long d = *divisors.begin();
  const IntMatrix phi = evaluate(cyclotomic(d), m);

  // Rows of pi span the left kernel of Phi_d(M): the quotient Q^n / im Phi_d(M).
  const auto left = kernel_basis(to_rational(phi.transpose()));
  ensure(!left.empty(), "a cyclotomic divisor gives a nonzero left kernel");
  RatMatrix pi = RatMatrix::from_rows(left);
  const RatMatrix q = to_rational(m);
  auto gram_inv = inverse(pi * pi.transpose());
  ensure(gram_inv.has_value(), "left kernel basis has full row rank");
  const RatMatrix bar = pi * q * pi.transpose() * *gram_inv;
  ensure(pi * q == bar * pi, "M descends to the quotient");
  ensure(power(bar, d) == RatMatrix::identity(bar.rows()), "the induced map has order dividing d");

  // Orbit average of the identity form.
  RatMatrix h(bar.rows(), bar.rows());
  RatMatrix g = RatMatrix::identity(bar.rows());
  for (unsigned long j = 0; j < d; ++j) {
    h += g.transpose() * g;
    g = bar * g;
  }
  const IntMatrix s = primitive_integer(pi.transpose() * h * pi);
  const RatMatrix sr = to_rational(s);
  ensure(!s.is_zero(), "pulled-back form is nonzero");
  ensure(is_fixed_class(m, sr), "pulled-back form is invariant");
  ensure(is_positive_semidefinite(sr), "pulled-back form is positive semidefinite");
  return s;
}

FixedNefWitness fixed_nef_witness(const EndoSpec& spec) {
  const IntMatrix& m = spec.matrix();
  const DynReport report = classify(spec);
  if (report.amplified) return amplified_certificate(m);

  FixedNefWitness w;
  if (!report.pcd) {
    if (auto s = pcd_nef_witness(spec)) {
      w.status = FixedNefWitness::Status::Found;
      w.rational = to_rational(*s);
      return w;
    }
    w.note = "invariant-subspace construction failed";
    return w;
  }
  // PCD but not amplified: some unit-circle eigenvalue is not a root of unity. Fixed nef
  // classes then live over a real number field, not over Q.
  if (auto a = unit_circle_witness(m, report.char_poly)) {
    w.status = FixedNefWitness::Status::Found;
    w.algebraic = std::move(*a);
    return w;
  }
  w.note = "no unit-circle eigenvector witness found";
  return w;
}

}  // namespace ampdyn::abelian
