#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ampdyn/abelian/classify.hpp"
#include "ampdyn/abelian/nef_witness.hpp"
#include "ampdyn/abelian/torsion.hpp"
#include "ampdyn/exactpoly/char_poly.hpp"
#include "ampdyn/exactpoly/inertia.hpp"
#include "fixtures.hpp"

using namespace ampdyn;
using namespace ampdyn::abelian;
using fixture::int_matrix;

namespace {

EndoSpec lehmer_spec() { return EndoSpec(exactpoly::companion(fixture::lehmer())); }
const IntMatrix kRot = int_matrix({{0, -1}, {1, 0}});
const IntMatrix kCat = int_matrix({{2, 1}, {1, 1}});

}  // namespace

TEST_CASE("EndoSpec rejects singular matrices") {
  CHECK_THROWS_WITH_AS(EndoSpec(int_matrix({{1, 2}, {2, 4}})), "det(M) = 0: not surjective", Error);
  CHECK_THROWS_AS(EndoSpec(IntMatrix(2, 3)), Error);
}

TEST_CASE("classify examples") {
  DynReport l = classify(lehmer_spec());
  CHECK(l.pcd);
  CHECK_FALSE(l.amplified);
  CHECK(l.degree == 1);
  CHECK(l.entropy == Entropy::Positive);
  CHECK(l.dense_orbit);

  DynReport id = classify(EndoSpec(IntMatrix::identity(2)));
  CHECK_FALSE(id.amplified);
  CHECK_FALSE(id.pcd);
  CHECK(id.entropy == Entropy::Null);
  CHECK(id.degree == 1);

  DynReport cat = classify(EndoSpec(kCat));
  CHECK(cat.amplified);
  CHECK(cat.pcd);
  CHECK(cat.entropy == Entropy::Positive);
  CHECK(cat.degree == 1);

  DynReport rot = classify(EndoSpec(kRot));
  CHECK_FALSE(rot.amplified);
  CHECK_FALSE(rot.pcd);
  CHECK(rot.entropy == Entropy::Null);
}

TEST_CASE("degree") {
  CHECK(degree(EndoSpec(int_matrix({{2}}))) == 4);
  CHECK(degree(EndoSpec(IntMatrix::identity(4))) == 1);
  CHECK(degree(lehmer_spec()) == 1);
}

TEST_CASE("fix_count and torsion counts") {
  CHECK(*fix_count(EndoSpec(kRot), 1) == 4);
  CHECK(oracle::bruteforce_fixed_points(fixture::to_ll(kRot), 2) == 4);
  CHECK_FALSE(fix_count(EndoSpec(IntMatrix::identity(2)), 3).has_value());
  CHECK(*fix_count(EndoSpec(kCat), 1) == 1);
  CHECK_THROWS_AS(fix_count(EndoSpec(kCat, true), 1), Error);

  CHECK(torsion_fixed_count(EndoSpec(kRot), 1, 2) == 4);
  CHECK(torsion_fixed_count(EndoSpec(int_matrix({{2}})), 1, 5) == 1);
  CHECK(torsion_fixed_count(EndoSpec(int_matrix({{1}})), 1, 3) == 9);
  CHECK(torsion_fixed_count_bruteforce(EndoSpec(kRot), 1, 2) == 4);
}

TEST_CASE("Smith invariants") {
  CHECK(smith_invariants(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) ==
        std::vector<mpz_class>{2, 6, 12});
  CHECK(smith_invariants(int_matrix({{0, 0}, {0, 0}})) == std::vector<mpz_class>{0, 0});
  CHECK(smith_invariants(int_matrix({{6, 4}, {4, 6}})) == std::vector<mpz_class>{2, 10});
}

TEST_CASE("torsion count: Smith form vs enumeration on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
    if (determinant(m) == 0) continue;
    EndoSpec spec(m);
    for (unsigned long modulus : {2ul, 3ul, 4ul, 6ul}) {
      const auto want = oracle::bruteforce_fixed_points(fixture::to_ll(m), static_cast<long long>(modulus));
      CHECK(torsion_fixed_count(spec, 1, modulus) == static_cast<long>(want));
      CHECK(torsion_fixed_count_bruteforce(spec, 1, modulus) == static_cast<long>(want));
    }
  }
}

TEST_CASE("is_pcd_via_periods") {
  CHECK(is_pcd_via_periods(lehmer_spec()));
  CHECK_FALSE(is_pcd_via_periods(EndoSpec(kRot)));
  CHECK(is_pcd_via_periods(EndoSpec(kCat)));
}

TEST_CASE("spectral radius") {
  SpectralRadius cat = spectral_radius(EndoSpec(kCat));
  CHECK(std::abs(cat.n1.approx() - 6.854101966249685) < 1e-6);
  REQUIRE(cat.rho.has_value());
  CHECK(std::abs(cat.rho->approx() - 2.618033988749895) < 1e-6);
  CHECK(cat.n1.width() <= mpq_class(1, 1000000));

  SpectralRadius id = spectral_radius(EndoSpec(IntMatrix::identity(3)));
  CHECK(exactpoly::compare(id.n1, mpq_class(1)) == 0);

  SpectralRadius l = spectral_radius(lehmer_spec());
  REQUIRE(l.rho.has_value());
  CHECK(l.rho->lo >= mpq_class(117627, 100000));
  CHECK(l.rho->hi <= mpq_class(117629, 100000));
  CHECK(std::abs(l.n1.approx() - 1.176280818259916 * 1.176280818259916) < 1e-6);

  // Rotation-dominated: rho(M) is attained only by complex eigenvalues.
  SpectralRadius r = spectral_radius(EndoSpec(int_matrix({{0, -2}, {1, 0}})));
  CHECK_FALSE(r.rho.has_value());
  CHECK(exactpoly::compare(r.n1, mpq_class(2)) == 0);
}

TEST_CASE("pcd_nef_witness") {
  auto rot = pcd_nef_witness(EndoSpec(kRot));
  REQUIRE(rot.has_value());
  CHECK(*rot == IntMatrix::identity(2));
  CHECK_FALSE(pcd_nef_witness(lehmer_spec()).has_value());
  auto block = pcd_nef_witness(EndoSpec(block_diagonal(kRot, kCat)));
  REQUIRE(block.has_value());
  const RatMatrix s = to_rational(*block);
  CHECK(is_fixed_class(block_diagonal(kRot, kCat), s));
  CHECK(exactpoly::is_positive_semidefinite(s));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i >= 2 || j >= 2) CHECK((*block)(i, j) == 0);
}

TEST_CASE("fixed_nef_witness") {
  auto rot = fixed_nef_witness(EndoSpec(kRot));
  REQUIRE(rot.status == FixedNefWitness::Status::Found);
  CHECK(*rot.rational == RatMatrix::identity(2));

  auto cat = fixed_nef_witness(EndoSpec(kCat));
  CHECK(cat.status == FixedNefWitness::Status::None);
  CHECK(cat.fixed_kernel.size() == 1);  // the indefinite invariant form
  REQUIRE(cat.separating_form.has_value());
  CHECK(exactpoly::is_positive_definite(*cat.separating_form));
  for (const auto& k : cat.fixed_kernel) CHECK(exactpoly::inertia(k).negative > 0);

  auto l = fixed_nef_witness(lehmer_spec());
  REQUIRE(l.status == FixedNefWitness::Status::Found);
  REQUIRE(l.algebraic.has_value());
  // Floating sanity check of the exactly verified class.
  const RatMatrix approx = l.algebraic->approx();
  const IntMatrix m = lehmer_spec().matrix();
  const RatMatrix q = to_rational(m);
  const RatMatrix diff = q.transpose() * approx * q - approx;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(std::abs(diff(i, j).get_d()) < 1e-6);
  // No rational fixed class is PSD and nonzero: all fixed rational forms are indefinite or zero.
  for (const auto& k : fixed_symmetric_kernel(m)) CHECK(exactpoly::inertia(k).negative > 0);
}

TEST_CASE("rationalize") {
  CHECK(rationalize(0.5) == mpq_class(1, 2));
  CHECK(rationalize(-0.333333333333) == mpq_class(-1, 3));
  CHECK(rationalize(3.14159265358979) == mpq_class(1146408, 364913));  // last convergent below 10^6
}
