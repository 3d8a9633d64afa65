#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ampdyn/conedyn/descent.hpp"
#include "ampdyn/conedyn/lp.hpp"
#include "ampdyn/conedyn/perron.hpp"

using namespace ampdyn;
using namespace ampdyn::conedyn;

namespace {

RatVector v(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RatMatrix rm(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> r;
  for (const auto& row : rows) r.push_back(v(row));
  return RatMatrix::from_rows(r);
}

RatMatrix shift3() { return rm({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }

// Independent 3-d test of extremality: g is extremal iff some plane through g and another
// generator has every generator on one closed side, and g is not a positive combination
// of two others on that plane.
bool extremal_3d(const std::vector<RatVector>& gens, std::size_t i) {
  auto cross = [](const RatVector& a, const RatVector& b) {
    return RatVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j == i) continue;
    RatVector n = cross(gens[i], gens[j]);
    if (n == RatVector(3, mpq_class(0))) continue;
    for (int s : {1, -1}) {
      bool supporting = true;
      for (const auto& h : gens) supporting = supporting && s * dot(n, h) >= 0;
      if (!supporting) continue;
      // On the facet plane the cone is 2-d; g is extremal iff all in-plane generators lie on one side of it.
      RatVector m = cross(n, gens[i]);
      bool pos = false, neg = false;
      for (const auto& h : gens)
        if (dot(n, h) == 0) {
          pos = pos || dot(m, h) > 0;
          neg = neg || dot(m, h) < 0;
        }
      if (!(pos && neg)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("exact simplex") {
  // min -x - y s.t. x + 2y + s = 4, 3x + y + t = 6.
  LpResult r = lp_minimize(rm({{1, 2, 1, 0}, {3, 1, 0, 1}}), v({4, 6}), v({-1, -1, 0, 0}));
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == mpq_class(-14, 5));
  CHECK(lp_minimize(rm({{1, -1}}), v({1}), v({-1, 0})).status == LpResult::Status::Unbounded);
  CHECK(lp_minimize(rm({{1, 1}}), v({-1}), v({0, 0})).status == LpResult::Status::Infeasible);
  // Redundant equality rows.
  auto x = lp_feasible(rm({{1, 1}, {2, 2}}), v({2, 4}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 2);
}

TEST_CASE("contains") {
  PolyCone o3 = PolyCone::orthant(3);
  CHECK(o3.contains(v({1, 2, 3})));
  CHECK_FALSE(o3.contains(v({1, -1, 0})));
  PolyCone c(2, {v({1, 0}), v({1, 1})});
  CHECK(c.contains(v({2, 1})));
  CHECK(*c.decompose(v({2, 1})) == v({1, 1}));
}

TEST_CASE("salient check at construction") {
  CHECK_THROWS_AS(PolyCone(2, {v({1, 0}), v({-1, 1}), v({0, -1})}), Error);
  CHECK(PolyCone::is_salient(2, {v({1, 0}), v({0, 1})}));
  CHECK_FALSE(PolyCone::is_salient(1, {v({1}), v({-1})}));
}

TEST_CASE("extremal rays") {
  CHECK(PolyCone::orthant(3).extremal_rays() == std::vector<IntVector>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});
  CHECK(PolyCone(2, {v({1, 0}), v({0, 1}), v({1, 1})}).extremal_rays() ==
        std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
  std::vector<RatVector> square{v({1, 1, 1}), v({1, -1, 1}), v({-1, 1, 1}), v({-1, -1, 1})};
  CHECK(PolyCone(3, square).extremal_rays().size() == 4);
  // Duplicates up to scaling collapse.
  CHECK(PolyCone(2, {v({2, 0}), v({1, 0}), v({0, 3})}).extremal_rays().size() == 2);
}

TEST_CASE("extremal rays agree with the 3-d supporting-plane oracle") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<RatVector> gens;
    const int count = 3 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k)
      gens.push_back(v({static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)}));
    std::vector<RatVector> uniq;
    for (const auto& g : gens) {
      bool dup = false;
      for (const auto& u : uniq) dup = dup || same_ray(u, g);
      if (!dup) uniq.push_back(g);
    }
    PolyCone c(3, uniq);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < uniq.size(); ++i) expected += extremal_3d(uniq, i) ? 1 : 0;
    CHECK(c.extremal_rays().size() == expected);
    // Rebuilding from the rays preserves membership.
    std::vector<RatVector> rays;
    for (const auto& r : c.extremal_rays()) rays.push_back(to_rational(r));
    PolyCone rebuilt(3, rays);
    for (int s = 0; s < 10; ++s) {
      RatVector x = v({static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5)});
      CHECK(c.contains(x) == rebuilt.contains(x));
    }
    ++checked;
  }
  CHECK(checked == 80);
}

TEST_CASE("minimal face") {
  PolyCone o3 = PolyCone::orthant(3);
  CHECK(o3.minimal_face(v({1, 1, 1})).extremal_rays().size() == 3);
  CHECK(o3.minimal_face(v({1, 0, 0})).extremal_rays() == std::vector<IntVector>{iv({1, 0, 0})});
  CHECK(o3.minimal_face(v({1, 1, 0})).extremal_rays() == std::vector<IntVector>{iv({0, 1, 0}), iv({1, 0, 0})});
  CHECK_THROWS_AS(o3.minimal_face(v({-1, 0, 0})), Error);
  // Square cone: the apex-to-edge midpoint lies on a 2-face.
  PolyCone sq(3, {v({1, 1, 1}), v({1, -1, 1}), v({-1, 1, 1}), v({-1, -1, 1})});
  CHECK(sq.minimal_face(v({1, 0, 1})).extremal_rays().size() == 2);
  CHECK(sq.minimal_face(v({0, 0, 1})).extremal_rays().size() == 4);
}

TEST_CASE("ray permutation") {
  auto cyc = ray_permutation(ConeEndo(shift3(), PolyCone::orthant(3)));
  CHECK(cyc.order == 3);
  auto diag = ray_permutation(ConeEndo(rm({{2, 0}, {0, 3}}), PolyCone::orthant(2)));
  CHECK(diag.order == 1);
  auto swap = ray_permutation(ConeEndo(rm({{0, 2}, {3, 0}}), PolyCone::orthant(2)));
  CHECK(swap.order == 2);
  CHECK(swap.image == std::vector<std::size_t>{1, 0});
  ConeEndo e(shift3(), PolyCone::orthant(3));
  auto p = e.power(cyc.order);
  for (const auto& r : cyc.rays) CHECK(p.matrix() * to_rational(r) == to_rational(r));
}

TEST_CASE("amplified test") {
  CHECK(amplified_test(ConeEndo(rm({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), PolyCone::orthant(3))));
  CHECK_FALSE(amplified_test(ConeEndo(RatMatrix::identity(3), PolyCone::orthant(3))));
  ConeEndo shift(shift3(), PolyCone::orthant(3));
  CHECK_FALSE(amplified_test(shift));
  CHECK(same_ray(*fixed_cone_point(shift), v({1, 1, 1})));
}

TEST_CASE("contract") {
  Contraction c = contract(ConeEndo(rm({{2, 0}, {0, 1}}), PolyCone::orthant(2)), v({0, 1}));
  CHECK(c.result.dim() == 1);
  CHECK(c.result.matrix() == rm({{2}}));
  CHECK(c.result.cone().extremal_rays() == std::vector<IntVector>{iv({1})});

  Contraction id = contract(ConeEndo(RatMatrix::identity(3), PolyCone::orthant(3)), v({1, 0, 0}));
  CHECK(id.result.matrix() == RatMatrix::identity(2));
  CHECK(id.result.cone().extremal_rays().size() == 2);
  CHECK(id.quotient * id.section == RatMatrix::identity(2));

  CHECK_THROWS_AS(contract(ConeEndo(rm({{2, 0}, {0, 1}}), PolyCone::orthant(2)), v({1, 1})), Error);
  // Contracting a ray of a non-simplicial cone may leave a line.
  PolyCone sq(3, {v({1, 1, 1}), v({1, -1, 1}), v({-1, 1, 1}), v({-1, -1, 1})});
  try {
    contract(ConeEndo(RatMatrix::identity(3), sq), v({1, 1, 1}));
    CHECK(true);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotContractible);
  }
}

TEST_CASE("descend examples") {
  DescentTrace t = descend(ConeEndo(rm({{2, 0}, {0, 1}}), PolyCone::orthant(2)), v({1, 0}));
  CHECK(t.steps.size() == 1);
  CHECK(t.final_amplified);
  CHECK(t.final_matrix == rm({{2}}));
  CHECK(t.steps[0].lift_guard);

  DescentTrace none = descend(ConeEndo(rm({{2, 0}, {0, 3}}), PolyCone::orthant(2)), v({1, 1}));
  CHECK(none.steps.empty());
  CHECK(none.final_amplified);

  try {
    descend(ConeEndo(rm({{1}}), PolyCone::orthant(1)), v({1}));
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
}

TEST_CASE("power limit ray") {
  PerronLimit d = power_limit_ray(ConeEndo(rm({{3, 0}, {0, 1}}), PolyCone::orthant(2)), v({1, 1}));
  CHECK(d.certified);
  CHECK(std::abs(d.rate - 3) < 1e-6);
  CHECK(std::abs(d.ray[0] - 1) < 1e-6);

  ConeEndo golden(rm({{2, 1}, {1, 1}}), PolyCone(2, {v({2, 1}), v({1, 2})}), Invariance::Forward);
  PerronLimit g = power_limit_ray(golden, v({1, 1}));
  CHECK(g.certified);
  CHECK(std::abs(g.rate - 2.618033988749895) < 1e-6);
  CHECK(std::abs(g.ray[0] / g.ray[1] - 1.618033988749895) < 1e-6);
  CHECK_THROWS_AS(ConeEndo(rm({{2, 1}, {1, 1}}), PolyCone(2, {v({2, 1}), v({1, 2})})), Error);

  CHECK_THROWS_AS(ConeEndo(rm({{0, -1}, {1, 0}}), PolyCone::orthant(2)), Error);
  try {
    power_limit_ray(ConeEndo(rm({{0, 1}, {1, 0}}), PolyCone::orthant(2)), v({2, 1}));
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
  CHECK_THROWS_AS(power_limit_ray(ConeEndo(rm({{3, 0}, {0, 1}}), PolyCone::orthant(2)), v({1, 0})), Error);
}
