// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "ampdyn/abelian/classify.hpp"
#include "ampdyn/abelian/nef_witness.hpp"
#include "ampdyn/abelian/torsion.hpp"
#include "ampdyn/cli/commands.hpp"
#include "ampdyn/cli/corpus.hpp"
#include "ampdyn/conedyn/descent.hpp"
#include "ampdyn/conedyn/perron.hpp"
#include "ampdyn/exactpoly/char_poly.hpp"
#include "ampdyn/exactpoly/cyclotomic.hpp"
#include "ampdyn/exactpoly/salem.hpp"
#include "ampdyn/hyperlattice/entropy.hpp"
#include "fixtures.hpp"

using namespace ampdyn;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Tally {
  long checked = 0;
  long failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures++ == 0) first = what;
  }
};

// ---- independent oracles ----------------------------------------------------------------

// Determinant by fraction Gaussian elimination.
mpq_class det_q(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) std::swap(a[p], a[c]), d = -d;
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

std::vector<std::vector<mpq_class>> dense(const RatMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

// PSD iff every principal minor is nonnegative.
bool psd_by_minors(const RatMatrix& s) {
  const std::size_t n = s.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    std::vector<std::vector<mpq_class>> sub(idx.size(), std::vector<mpq_class>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = s(idx[a], idx[b]);
    if (det_q(sub) < 0) return false;
  }
  return true;
}

// Negative definite iff (-1)^k times the k-th leading principal minor is positive.
bool negative_definite(const std::vector<std::vector<mpq_class>>& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    std::vector<std::vector<mpq_class>> sub(k, std::vector<mpq_class>(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub[a][b] = g[a][b];
    const mpq_class d = det_q(sub);
    if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) return false;
  }
  return true;
}

Eigen::MatrixXd to_double(const IntMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
  return d;
}

Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
  return d;
}

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

// Floating-point eigenvalue criteria: no eigenvalue of modulus 1 / no root-of-unity eigenvalue.
bool amplified_by_eigenvalues(const IntMatrix& m) {
  for (auto z : eigenvalues(to_double(m)))
    if (std::abs(std::abs(z) - 1.0) < 1e-6) return false;
  return true;
}

bool pcd_by_eigenvalues(const IntMatrix& m) {
  for (auto z : eigenvalues(to_double(m))) {
    if (std::abs(std::abs(z) - 1.0) > 1e-6) continue;
    for (int d : {1, 2, 3, 4, 5, 6, 8, 10, 12})
      if (std::abs(std::pow(z, d) - 1.0) < 1e-5) return false;
  }
  return true;
}

IntMatrix rows_int(const cli::ProblemFile& p) { return cli::integer_matrix(p.rows, "row"); }

std::vector<abelian::EndoSpec> abelian_corpus() {
  std::vector<abelian::EndoSpec> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    cli::CorpusSpec spec;
    spec.count = 60;
    spec.seed = 2024 + n;
    spec.dim = n;
    spec.bound = 3;
    for (const auto& [name, p] : cli::generate_corpus(spec)) out.emplace_back(rows_int(p));
  }
  // Designed elements with roots of unity, unipotent parts and mixed blocks.
  using fixture::int_matrix;
  for (const auto& m : {int_matrix({{0, -1}, {1, 0}}), int_matrix({{0, -1}, {1, 1}}), int_matrix({{1, 1}, {0, 1}}),
                        int_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), int_matrix({{-1, 0}, {0, -1}}),
                        int_matrix({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 1}}),
                        int_matrix({{1, 0, 0}, {0, 2, 1}, {0, 1, 1}}), int_matrix({{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}),
                        int_matrix({{2, 0}, {0, 3}}), int_matrix({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}),
                        int_matrix({{0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),  // Salem quartic
                        int_matrix({{0, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}})})
    out.emplace_back(m);
  return out;
}

// ---- criteria -----------------------------------------------------------------------------

struct Verdict {
  bool pass;
  std::string detail;
};

Verdict lehmer() {
  const auto t0 = Clock::now();
  const std::string text = fixture::companion_problem(fixture::lehmer());
  const cli::RunOutcome r = cli::run("classify-abelian", text, {});
  const abelian::EndoSpec spec(exactpoly::companion(fixture::lehmer()));
  const abelian::DynReport rep = abelian::classify(spec);
  const exactpoly::SalemReport salem = exactpoly::salem_check(rep.char_poly);
  const double secs = seconds_since(t0);

  Tally t;
  auto field = [&](const char* k) { return r.envelope.find(k) ? *r.envelope.find(k) : std::string(); };
  t.expect(r.exit_code == 0, "exit code");
  t.expect(field("pcd") == "true" && rep.pcd, "pcd");
  t.expect(field("amplified") == "false" && !rep.amplified, "amplified");
  t.expect(field("degree") == "1" && rep.degree == 1, "degree");
  t.expect(field("entropy") == "positive" && rep.entropy == abelian::Entropy::Positive, "entropy");
  t.expect(salem.verdict == exactpoly::SalemVerdict::Salem, "salem verdict");
  t.expect(rep.spectral_radius.rho.has_value(), "rho isolated");
  std::string interval = "none";
  if (rep.spectral_radius.rho) {
    const auto& rho = *rep.spectral_radius.rho;
    // 1.17628 is the value to six significant digits: every point of the interval must round to it.
    t.expect(rho.width() <= mpq_class(1, 100000), "interval width");
    t.expect(rho.lo >= mpq_class(1176275, 1000000) && rho.hi < mpq_class(1176285, 1000000),
             "interval rounds to 1.17628");
    double oracle = 0;
    for (auto z : oracle::roots(fixture::to_oracle(fixture::lehmer()))) oracle = std::max(oracle, std::abs(z));
    t.expect(rho.lo.get_d() < oracle + 1e-12 && oracle - 1e-12 <= rho.hi.get_d(), "oracle root in interval");
    interval = "(" + to_string(rho.lo) + ", " + to_string(rho.hi) + "]";
  }
  t.expect(secs < 5.0, "runtime");
  std::ostringstream d;
  d << "pcd=" << field("pcd") << " amplified=" << field("amplified") << " degree=" << field("degree")
    << " entropy=" << field("entropy") << " salem=" << exactpoly::to_string(salem.verdict) << " rho in " << interval
    << " time=" << secs << "s" << (t.failures ? " first failure: " + t.first : "");
  return {t.failures == 0, d.str()};
}

Verdict equivalence(const std::vector<abelian::EndoSpec>& corpus) {
  const auto t0 = Clock::now();
  Tally t;
  long non_pcd = 0, found_algebraic = 0, none = 0, search_failed = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& spec = corpus[i];
    const std::string tag = "element " + std::to_string(i) + " " + to_string(spec.matrix());
    const auto rep = abelian::classify(spec);
    t.expect(rep.amplified == amplified_by_eigenvalues(spec.matrix()), "amplified vs eigenvalue oracle, " + tag);
    t.expect(rep.pcd == pcd_by_eigenvalues(spec.matrix()), "pcd vs eigenvalue oracle, " + tag);
    t.expect(abelian::is_pcd_via_periods(spec) == rep.pcd, "is_pcd_via_periods, " + tag);

    const auto integral = abelian::pcd_nef_witness(spec);
    if (!rep.pcd) {
      ++non_pcd;
      const bool ok = integral && !integral->is_zero() && psd_by_minors(to_rational(*integral)) &&
                      spec.matrix().transpose() * *integral * spec.matrix() == *integral;
      t.expect(ok, "verified integral PSD witness, " + tag);
    } else {
      t.expect(!integral, "no integral witness for PCD, " + tag);
    }

    const auto w = abelian::fixed_nef_witness(spec);
    using S = abelian::FixedNefWitness::Status;
    if (w.status == S::SearchFailed) {
      ++search_failed;
      continue;
    }
    t.expect((w.status == S::None) == rep.amplified, "fixed_nef_witness status vs amplified, " + tag);
    if (w.status == S::None) {
      ++none;
      bool ok = w.separating_form.has_value();
      if (ok) {
        const RatMatrix& f = *w.separating_form;
        ok = psd_by_minors(f) && det_q(dense(f)) > 0;
        for (const auto& k : w.fixed_kernel) {
          mpq_class pairing = 0;
          for (std::size_t a = 0; a < f.rows(); ++a)
            for (std::size_t b = 0; b < f.cols(); ++b) pairing += f(a, b) * k(a, b);
          ok = ok && pairing == 0 && abelian::is_fixed_class(spec.matrix(), k);
        }
      }
      t.expect(ok, "separating form, " + tag);
    } else if (w.rational) {
      const RatMatrix m = to_rational(spec.matrix());
      t.expect(!w.rational->is_zero() && psd_by_minors(*w.rational) && m.transpose() * *w.rational * m == *w.rational,
               "rational witness, " + tag);
    } else {
      ++found_algebraic;
      const Eigen::MatrixXd s = to_double(w.algebraic->approx(60));
      const Eigen::MatrixXd m = to_double(spec.matrix());
      const double scale = s.norm();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
      t.expect(scale > 1e-9 && (m.transpose() * s * m - s).norm() < 1e-8 * scale &&
                   es.eigenvalues().minCoeff() > -1e-9 * scale,
               "algebraic witness, " + tag);
    }
  }
  const double secs = seconds_since(t0);
  t.expect(secs < 60.0, "runtime");
  std::ostringstream d;
  d << corpus.size() << " specs, " << non_pcd << " non-PCD with verified integral witnesses, " << none
    << " separating forms, " << found_algebraic << " algebraic witnesses, " << search_failed << " search-failed, "
    << t.failures << " disagreements, time=" << secs << "s" << (t.failures ? "; first: " + t.first : "");
  return {t.failures == 0, d.str()};
}

Verdict lefschetz() {
  Tally t;
  long cases = 0;
  std::vector<long> e(4, -2);
  while (true) {
    const IntMatrix m = fixture::int_matrix({{e[0], e[1]}, {e[2], e[3]}});
    const long long d1 = oracle::det(fixture::to_ll(m - IntMatrix::identity(2)));
    if (d1 != 0 && oracle::det(fixture::to_ll(m)) != 0) {
      ++cases;
      const abelian::EndoSpec spec(m);
      const long long n = std::llabs(d1);
      const auto count = abelian::fix_count(spec, 1);
      const long long brute = oracle::bruteforce_fixed_points(fixture::to_ll(m), n);
      const std::string tag = to_string(m);
      t.expect(count && *count == mpz_class(static_cast<long>(brute)), "fix_count vs enumeration, " + tag);
      t.expect(abelian::torsion_fixed_count(spec, 1, mpz_class(static_cast<long>(n))) == mpz_class(static_cast<long>(brute)), "Smith count, " + tag);
    }
    std::size_t k = 0;
    while (k < 4 && e[k] == 2) e[k++] = -2;
    if (k == 4) break;
    ++e[k];
  }
  return {t.failures == 0, std::to_string(cases) + " matrices, " + std::to_string(t.failures) + " disagreements" +
                               (t.failures ? "; first: " + t.first : "")};
}

Verdict invariance(const std::vector<abelian::EndoSpec>& corpus) {
  Tally t;
  long products = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& spec = corpus[i];
    const auto base = abelian::classify(spec);
    const std::string tag = "element " + std::to_string(i);
    for (unsigned long k = 2; k <= 6; ++k) {
      const auto r = abelian::classify(spec.power(k));
      t.expect(r.amplified == base.amplified && r.pcd == base.pcd, tag + " power " + std::to_string(k));
    }
    const auto tr = abelian::classify(spec.transpose());
    t.expect(tr.amplified == base.amplified && tr.pcd == base.pcd && tr.char_poly == base.char_poly &&
                 tr.entropy == base.entropy && tr.degree == base.degree,
             tag + " transpose");
    const auto tl = abelian::classify(spec.with_translation(true));
    t.expect(tl.amplified == base.amplified && tl.pcd == base.pcd, tag + " translation");
    const auto& other = corpus[(i * 7 + 3) % corpus.size()];
    if (spec.n() + other.n() <= 6) {
      ++products;
      const auto o = abelian::classify(other);
      const auto p = abelian::classify(abelian::product(spec, other));
      t.expect(p.amplified == (base.amplified && o.amplified) && p.pcd == (base.pcd && o.pcd), tag + " product");
    }
  }
  return {t.failures == 0, std::to_string(corpus.size()) + " specs x (powers 2..6, transpose, translation), " +
                               std::to_string(products) + " products, " + std::to_string(t.failures) + " violations" +
                               (t.failures ? "; first: " + t.first : "")};
}

Verdict null_entropy(const std::vector<abelian::EndoSpec>& corpus) {
  Tally t;
  long nulls = 0, full_rank = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& spec = corpus[i];
    const auto rep = abelian::classify(spec);
    const std::string tag = "element " + std::to_string(i) + " " + to_string(spec.matrix());
    if (rep.entropy == abelian::Entropy::Null) {
      ++nulls;
      t.expect(abs(spec.det()) == 1, "null entropy with |det| != 1, " + tag);
    }
    const auto w = abelian::fixed_nef_witness(spec);
    bool full = false;
    if (w.rational) {
      full = det_q(dense(*w.rational)) != 0;
    } else if (w.algebraic) {
      const Eigen::MatrixXd s = to_double(w.algebraic->approx(60));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
      full = es.eigenvalues().minCoeff() > 1e-6 * s.norm();
    }
    if (full) {
      ++full_rank;
      t.expect(rep.entropy == abelian::Entropy::Null, "full-rank fixed witness with positive entropy, " + tag);
    }
  }
  return {t.failures == 0, std::to_string(nulls) + " null-entropy specs all with |det| = 1, " + std::to_string(full_rank) +
                               " full-rank fixed witnesses all null, " + std::to_string(t.failures) + " violations" +
                               (t.failures ? "; first: " + t.first : "")};
}

std::vector<cli::ProblemFile> cone_systems(std::uint64_t seed) {
  cli::CorpusSpec spec;
  spec.kind = cli::ProblemKind::Cone;
  spec.count = 200;
  spec.seed = seed;
  spec.dim = 5;
  std::vector<cli::ProblemFile> out;
  std::vector<int> per_dim(6, 0);
  for (auto& [name, p] : cli::generate_corpus(spec)) {
    const std::size_t d = p.rows.size();
    if (per_dim[d] < 5) ++per_dim[d], out.push_back(p);
  }
  return out;
}

conedyn::ConeEndo cone_endo(const cli::ProblemFile& p) {
  return conedyn::ConeEndo(cli::rational_matrix(p.rows), conedyn::PolyCone(p.rows.size(), p.generators), p.invariance);
}

Verdict descent() {
  Tally t;
  const auto systems = cone_systems(99);
  long total_steps = 0;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto& p = systems[s];
    const std::string tag = "system " + std::to_string(s) + " (dim " + std::to_string(p.rows.size()) + ")";
    try {
      const conedyn::ConeEndo e = cone_endo(p);
      const conedyn::DescentTrace tr = conedyn::descend(e, *p.big);
      total_steps += static_cast<long>(tr.steps.size());
      t.expect(tr.steps.size() <= e.dim(), tag + " step bound");
      std::size_t dim = e.dim();
      for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const auto& st = tr.steps[i];
        t.expect(st.quotient.cols() == dim && st.quotient.rows() == dim - 1 && st.induced.rows() == dim - 1,
                 tag + " dimension drop");
        const RatVector pulled = st.quotient.transpose() * tr.big_class_path[i + 1];
        t.expect(pulled == tr.big_class_path[i], tag + " B_i = B_{i+1} o q_i");
        --dim;
      }
      std::vector<RatVector> rays;
      for (const auto& r : tr.final_rays) rays.push_back(to_rational(r));
      const conedyn::ConeEndo fin(tr.final_matrix, conedyn::PolyCone(dim, rays));
      t.expect(tr.final_amplified && conedyn::amplified_test(fin), tag + " final amplified");
    } catch (const Error& err) {
      t.expect(false, tag + " threw " + err.what());
    }
  }
  bool control = false;
  try {
    conedyn::descend(conedyn::ConeEndo(RatMatrix::identity(3), conedyn::PolyCone::orthant(3)), {1, 1, 1});
  } catch (const Error& err) {
    control = err.kind() == ErrorKind::HypothesisViolated;
  }
  t.expect(control, "identity control did not raise HypothesisViolated");
  return {t.failures == 0, std::to_string(systems.size()) + " systems (dims 2-5), " + std::to_string(total_steps) +
                               " contractions, identity control " + (control ? "HypothesisViolated" : "MISSING") +
                               (t.failures ? "; first: " + t.first : "")};
}

std::vector<cli::ProblemFile> lattice_corpus() {
  std::vector<cli::ProblemFile> out;
  const std::pair<std::size_t, std::size_t> plan[] = {{2, 17}, {3, 17}, {4, 16}};
  for (const auto& [rank, count] : plan) {
    cli::CorpusSpec spec;
    spec.kind = cli::ProblemKind::Lattice;
    spec.count = count;
    spec.seed = 500 + rank;
    spec.dim = rank;
    for (auto& [name, p] : cli::generate_corpus(spec)) out.push_back(p);
  }
  return out;
}

Verdict lattices() {
  Tally t;
  using hyperlattice::Entropy;
  const hyperlattice::QuadLattice pell_lattice(fixture::int_matrix({{1, 0}, {0, -2}}));
  const hyperlattice::LatticeIsometry pell(pell_lattice, fixture::int_matrix({{3, 4}, {2, 3}}));
  const auto pr = hyperlattice::entropy_class(pell);
  const auto pw = hyperlattice::positive_entropy_witness(pell);
  t.expect(pr.entropy == Entropy::Positive, "Pell entropy");
  t.expect(pw.q12 == exactpoly::RatPoly::constant(8) && pw.q_sum == exactpoly::RatPoly::constant(16), "Pell certificates");

  long positive = 0, finite = 0;
  const auto corpus = lattice_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& p = corpus[i];
    const IntMatrix gram = cli::integer_matrix(p.gram, "gram"), g = rows_int(p);
    const std::size_t n = g.rows();
    const std::string tag = "isometry " + std::to_string(i) + " " + to_string(g);
    const hyperlattice::LatticeIsometry iso(hyperlattice::QuadLattice(gram), g);
    const auto rep = hyperlattice::entropy_class(iso);
    positive += rep.entropy == Entropy::Positive;

    // Independent side: ker(g^L - I), L = lcm of the orders d with phi(d) <= rank, meets the
    // closed positive cone iff the restricted form is not negative definite.
    unsigned long lcm = 1;
    for (unsigned long d = 1; d <= 60; ++d)
      if (exactpoly::euler_phi(d) <= n) lcm = std::lcm(lcm, d);
    const auto kernel = kernel_basis(to_rational(power(g, lcm) - IntMatrix::identity(n)));
    std::vector<std::vector<mpq_class>> restricted(kernel.size(), std::vector<mpq_class>(kernel.size()));
    const RatMatrix qg = to_rational(gram);
    for (std::size_t a = 0; a < kernel.size(); ++a)
      for (std::size_t b = 0; b < kernel.size(); ++b) restricted[a][b] = dot(kernel[a], qg * kernel[b]);
    const bool fixed_in_cone = !kernel.empty() && !negative_definite(restricted);
    t.expect((rep.entropy == Entropy::Positive) == !fixed_in_cone, "entropy vs fixed positive-cone vector, " + tag);

    if (rep.entropy == Entropy::Positive) {
      std::vector<double> mods;
      std::complex<double> lead;
      for (auto z : eigenvalues(to_double(g))) {
        mods.push_back(std::abs(z));
        if (std::abs(z) >= std::abs(lead)) lead = z;
      }
      std::sort(mods.rbegin(), mods.rend());
      t.expect(std::abs(lead.imag()) < 1e-9 && mods[0] > mods[1] + 1e-9, "leading eigenvalue real and simple, " + tag);
      try {
        const auto w = hyperlattice::positive_entropy_witness(iso);
        t.expect(w.q11.is_zero() && w.q22.is_zero(), "isotropic eigenvectors, " + tag);
      } catch (const Error& e) {
        t.expect(false, "positive witness threw " + std::string(e.what()) + ", " + tag);
      }
    }

    std::optional<unsigned long> order;
    IntMatrix acc = g;
    for (unsigned long k = 1; k <= 24 && !order; ++k, acc = acc * g)
      if (acc == IntMatrix::identity(n)) order = k;
    finite += order.has_value();
    const auto got = hyperlattice::finite_order_test(iso);
    t.expect(order ? got == order : (!got || *got > 24), "finite order, " + tag);
  }
  return {t.failures == 0, "Pell q(D1,D2)=" + pw.q12.to_string() + " q(D1+D2)=" + pw.q_sum.to_string() + "; " +
                               std::to_string(corpus.size()) + " reflection products (rank 2-4), " +
                               std::to_string(positive) + " positive, " + std::to_string(finite) + " of finite order, " +
                               std::to_string(t.failures) + " disagreements" + (t.failures ? "; first: " + t.first : "")};
}

Verdict perron() {
  Tally t;
  const auto systems = cone_systems(4242);
  double worst = 0;
  int max_iter = 0;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto& p = systems[s];
    const std::string tag = "system " + std::to_string(s);
    const conedyn::ConeEndo e = cone_endo(p);
    const auto cp = exactpoly::char_poly(e.matrix());
    const auto top = exactpoly::largest_real_root(cp);
    // Unique dominant eigenvalue: the largest real root strictly dominates every other root.
    std::vector<double> mods;
    for (auto z : oracle::roots(fixture::to_oracle(cp))) mods.push_back(std::abs(z));
    std::sort(mods.rbegin(), mods.rend());
    const bool unique = top && mods.size() >= 2 && mods[0] > mods[1] + 1e-6 && std::abs(top->approx() - mods[0]) < 1e-6;
    t.expect(unique, tag + " dominant eigenvalue not certified");
    try {
      const auto lim = conedyn::power_limit_ray(e, *p.start);
      max_iter = std::max(max_iter, lim.iterations);
      t.expect(lim.iterations <= 200, tag + " iterations");
      if (top) {
        const double err = std::abs(lim.rate - top->approx());
        worst = std::max(worst, err);
        t.expect(err < 1e-4, tag + " rate");
      }
    } catch (const Error& err) {
      t.expect(false, tag + " threw " + err.what());
    }
  }
  std::ostringstream d;
  d << systems.size() << " systems, max iterations " << max_iter << ", worst |r - lambda| = " << worst
    << (t.failures ? "; first: " + t.first : "");
  return {t.failures == 0, d.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Verdict determinism(const std::vector<abelian::EndoSpec>& abelian_specs) {
  const fs::path dir = fixture::scratch_dir("acceptance_corpus");
  const fs::path files = dir / "corpus";
  std::vector<std::pair<std::string, cli::ProblemFile>> all;
  for (std::size_t i = 0; i < abelian_specs.size(); ++i) {
    cli::ProblemFile p;
    for (std::size_t r = 0; r < abelian_specs[i].n(); ++r) p.rows.push_back(to_rational(abelian_specs[i].matrix().row(r)));
    char name[32];
    std::snprintf(name, sizeof name, "abelian_%04zu.prob", i);
    all.emplace_back(name, p);
  }
  const auto add = [&](const std::vector<cli::ProblemFile>& ps, const char* prefix) {
    for (std::size_t i = 0; i < ps.size(); ++i) all.emplace_back(prefix + std::to_string(1000 + i) + ".prob", ps[i]);
  };
  add(lattice_corpus(), "lattice_");
  add(cone_systems(99), "cone_a");
  add(cone_systems(4242), "cone_b");
  cli::CorpusSpec polys;
  polys.kind = cli::ProblemKind::Poly;
  polys.count = 30;
  polys.seed = 8;
  polys.dim = 6;
  for (auto& f : cli::generate_corpus(polys)) all.push_back(f);
  cli::write_corpus(files.string(), all);

  auto batch = [&](const std::string& extra, const std::string& out) {
    const std::string cmd = std::string(AMPDYN_EXE) + " batch " + files.string() + extra + " --json " +
                            (dir / out).string() + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const auto t0 = Clock::now();
  const int s1 = batch("", "seq1.txt");
  const int p1 = batch(" --parallel 4", "par.txt");
  const int s2 = batch("", "seq2.txt");
  const double secs = seconds_since(t0);
  const std::string a = slurp(dir / "seq1.txt"), b = slurp(dir / "par.txt"), c = slurp(dir / "seq2.txt");
  const bool same = !a.empty() && a == b && a == c;
  const bool clean = s1 == 0 && p1 == 0 && s2 == 0;
  std::ostringstream d;
  d << all.size() << " files, " << a.size() << " bytes, sequential vs --parallel 4 "
    << (a == b ? "identical" : "DIFFER") << ", repeat " << (a == c ? "identical" : "DIFFER") << ", exit codes " << s1
    << "/" << p1 << "/" << s2 << ", time=" << secs << "s";
  return {same && clean, d.str()};
}

}  // namespace

int main() {
  const auto corpus = abelian_corpus();
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"Lehmer reproduction", lehmer},
      {"eigenvalue / nef-witness equivalence", [&] { return equivalence(corpus); }},
      {"Lefschetz fixed-point count oracle", lefschetz},
      {"invariance suite", [&] { return invariance(corpus); }},
      {"null-entropy automorphism property", [&] { return null_entropy(corpus); }},
      {"cone descent suite", descent},
      {"hyperbolic lattice suite", lattices},
      {"Perron limit", perron},
      {"batch determinism", [&] { return determinism(corpus); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("unexpected exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << v.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
