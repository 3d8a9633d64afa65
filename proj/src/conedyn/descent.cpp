#include "ampdyn/conedyn/descent.hpp"

#include "ampdyn/conedyn/lp.hpp"

namespace ampdyn::conedyn {

namespace {

mpq_class pair(const RatVector& b, const RatVector& x) { return dot(b, x); }

RatVector pull(const RatVector& b, const RatMatrix& m) {
  // b o m as a row vector.
  RatVector out(m.cols(), mpq_class(0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out[j] += b[i] * m(i, j);
  return out;
}

}  // namespace

bool lift_guard_holds(const ConeEndo& e, const RatVector& ray) {
  // Variables: c >= 0 on generators, a+ and a- >= 0; (phi - I) G c = (a+ - a-) r, sum c = 1.
  const auto& gens = e.cone().generators();
  const std::size_t d = e.dim(), ng = gens.size();
  const RatMatrix shift = e.matrix() - RatMatrix::identity(d);
  RatMatrix a(d + 1, ng + 2);
  for (std::size_t j = 0; j < ng; ++j) {
    const RatVector col = shift * gens[j];
    for (std::size_t i = 0; i < d; ++i) a(i, j) = col[i];
    a(d, j) = 1;
  }
  for (std::size_t i = 0; i < d; ++i) {
    a(i, ng) = -ray[i];
    a(i, ng + 1) = ray[i];
  }
  RatVector rhs(d + 1, mpq_class(0));
  rhs[d] = 1;
  for (int sign : {1, -1}) {
    RatVector cost(ng + 2, mpq_class(0));
    cost[ng] = -sign;
    cost[ng + 1] = sign;
    LpResult r = lp_minimize(a, rhs, cost);
    if (r.status == LpResult::Status::Infeasible) return true;  // nothing to lift
    if (r.status == LpResult::Status::Unbounded || r.value < 0) return false;
  }
  return true;
}

DescentTrace descend(const ConeEndo& input, const RatVector& big) {
  if (big.size() != input.dim()) fail(ErrorKind::Dimension, "big class length differs from the cone dimension");
  bool positive_somewhere = false;
  for (const auto& g : input.cone().generators()) positive_somewhere = positive_somewhere || pair(big, g) > 0;
  if (!positive_somewhere) fail(ErrorKind::PreconditionViolated, "B is not positive anywhere on the cone");

  DescentTrace trace;
  ConeEndo e = input;
  RatVector b = big;
  trace.big_class_path.push_back(b);
  const std::size_t max_steps = input.dim();
  while (true) {
    auto x = fixed_cone_point(e);
    if (!x) {
      trace.final_amplified = true;
      break;
    }
    if (pair(b, *x) != 0)
      fail(ErrorKind::HypothesisViolated, "fixed class x = (" + [&] {
        std::string s;
        for (std::size_t i = 0; i < x->size(); ++i) s += (i ? ", " : "") + to_string((*x)[i]);
        return s;
      }() + ") has B(x) = " + to_string(pair(b, *x)) + " != 0");
    ensure(trace.steps.size() < max_steps, "descent terminates within dim steps");

    const unsigned long k = ray_permutation(e).order;
    const ConeEndo pe = e.power(k);
    const PolyCone face = e.cone().minimal_face(*x);
    // Lexicographically smallest ray of the face fixed pointwise by phi^k.
    std::optional<RatVector> chosen;
    for (const auto& ray : face.extremal_rays()) {
      const RatVector r = to_rational(ray);
      if (pe.matrix() * r != r) continue;
      if (pair(b, r) != 0)
        fail(ErrorKind::HypothesisViolated, "fixed extremal ray has nonzero pairing with B");
      chosen = r;
      break;
    }
    if (!chosen) fail(ErrorKind::SearchFailed, "no pointwise fixed extremal ray in the minimal face");

    Contraction c = contract(pe, *chosen);
    DescentStep step;
    step.power = k;
    step.fixed_point = *x;
    step.ray = c.ray;
    step.quotient = c.quotient;
    step.section = c.section;
    step.induced = c.result.matrix();
    step.lift_guard = lift_guard_holds(pe, *chosen);

    RatVector next = pull(b, c.section);
    ensure(pull(next, c.quotient) == b, "B_i = B_{i+1} o q_i");
    ensure(c.result.dim() + 1 == e.dim(), "each contraction drops the dimension by one");
    trace.steps.push_back(std::move(step));
    trace.big_class_path.push_back(next);
    b = std::move(next);
    e = c.result;
  }
  trace.final_matrix = e.matrix();
  trace.final_rays = e.cone().extremal_rays();
  return trace;
}

}  // namespace ampdyn::conedyn
