#include "ampdyn/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ampdyn/abelian/classify.hpp"
#include "ampdyn/abelian/nef_witness.hpp"
#include "ampdyn/abelian/torsion.hpp"
#include "ampdyn/cli/report.hpp"
#include "ampdyn/conedyn/descent.hpp"
#include "ampdyn/conedyn/perron.hpp"
#include "ampdyn/exactpoly/cyclotomic.hpp"
#include "ampdyn/exactpoly/roots.hpp"
#include "ampdyn/exactpoly/salem.hpp"
#include "ampdyn/hyperlattice/entropy.hpp"

namespace ampdyn::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension:
    case ErrorKind::Domain:
    case ErrorKind::Parse:
    case ErrorKind::NotSurjective:
    case ErrorKind::Unsupported:
    case ErrorKind::NotIsometry:
    case ErrorKind::BadSignature:
    case ErrorKind::NotInvariant:
    case ErrorKind::NotSalient:
      return kInvalidInput;
    case ErrorKind::PreconditionViolated:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::NotContractible:
      return kHypothesisViolated;
    case ErrorKind::SearchFailed:
    case ErrorKind::FieldTooLarge:
    case ErrorKind::NoConvergence:
    case ErrorKind::NoneInPositiveCone:
      return kIncomplete;
    case ErrorKind::Internal:
      return kInternal;
  }
  return kInternal;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"classify-abelian", "fix-count",    "torsion-oracle", "classify-lattice",
                                                 "descend-cone",     "poly-analyze", "salem-check"};
  return names;
}

bool is_command(const std::string& name) {
  const auto& n = command_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

const char* default_command(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Abelian: return "classify-abelian";
    case ProblemKind::Lattice: return "classify-lattice";
    case ProblemKind::Cone: return "descend-cone";
    case ProblemKind::Poly: return "poly-analyze";
  }
  return "";
}

namespace {

using namespace wire;

struct Sink {
  std::vector<Field>& out;
  void operator()(std::string key, std::string value) {
    std::replace(value.begin(), value.end(), '\n', ' ');  // keep the wire format one value per line
    out.emplace_back(std::move(key), std::move(value));
  }
};

void expect_kind(const ProblemFile& p, ProblemKind want, const std::string& command) {
  if (p.kind != want)
    fail(ErrorKind::Domain, command + " expects kind " + to_string(want) + ", got " + to_string(p.kind));
}

abelian::EndoSpec abelian_spec(const ProblemFile& p) {
  return abelian::EndoSpec(integer_matrix(p.rows, "row"), p.translation);
}

int classify_abelian(const ProblemFile& p, const Options&, Sink put) {
  const abelian::EndoSpec spec = abelian_spec(p);
  const abelian::DynReport r = abelian::classify(spec);
  put("n", std::to_string(r.n));
  put("translation", boolean(spec.has_translation()));
  put("det", number(spec.det()));
  put("degree", number(r.degree));
  put("char_poly", poly(r.char_poly));
  put("amplified", boolean(r.amplified));
  put("pcd", boolean(r.pcd));
  put("entropy", abelian::to_string(r.entropy));
  put("dense_orbit", boolean(r.dense_orbit));
  put("spectral_radius.n1", algebraic(r.spectral_radius.n1));
  put("spectral_radius.rho", r.spectral_radius.rho ? algebraic(*r.spectral_radius.rho) : "none");
  put("pcd_via_periods", boolean(abelian::is_pcd_via_periods(spec)));

  const abelian::FixedNefWitness w = abelian::fixed_nef_witness(spec);
  put("fixed_nef.status", abelian::to_string(w.status));
  if (w.rational) put("fixed_nef.rational", matrix(*w.rational));
  if (w.algebraic) {
    put("fixed_nef.field", algebraic(w.algebraic->trace));
    put("fixed_nef.entries", field_matrix(w.algebraic->entries));
  }
  if (w.status == abelian::FixedNefWitness::Status::None) {
    put("fixed_nef.fixed_kernel_dim", std::to_string(w.fixed_kernel.size()));
    if (w.separating_form) put("fixed_nef.separating_form", matrix(*w.separating_form));
  }
  if (!w.note.empty()) put("fixed_nef.note", w.note);
  return w.status == abelian::FixedNefWitness::Status::SearchFailed ? kIncomplete : kOk;
}

int fix_count(const ProblemFile& p, const Options& o, Sink put) {
  const abelian::EndoSpec spec = abelian_spec(p);
  put("power", std::to_string(o.power));
  const auto c = abelian::fix_count(spec, o.power);
  put("fix_count", c ? number(*c) : "infinite");
  return kOk;
}

int torsion_oracle(const ProblemFile& p, const Options& o, Sink put) {
  if (!o.modulus || *o.modulus == 0) fail(ErrorKind::Domain, "torsion-oracle needs --modulus N with N >= 1");
  const abelian::EndoSpec spec = abelian_spec(p);
  const unsigned long n = *o.modulus;
  put("power", std::to_string(o.power));
  put("modulus", std::to_string(n));
  const IntMatrix shifted = power(spec.matrix(), o.power) - IntMatrix::identity(spec.n());
  put("smith_invariants", vector(abelian::smith_invariants(shifted)));
  const mpz_class smith = abelian::torsion_fixed_count(spec, o.power, mpz_class(n));
  put("torsion_fixed_count", number(smith));
  try {
    const mpz_class brute = abelian::torsion_fixed_count_bruteforce(spec, o.power, n);
    put("bruteforce_count", number(brute));
    put("agree", boolean(brute == smith));
    return brute == smith ? kOk : kInternal;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unsupported) throw;
    put("bruteforce_count", "skipped");
    put("agree", "skipped");
    return kOk;
  }
}

int classify_lattice(const ProblemFile& p, const Options& o, Sink put) {
  const hyperlattice::QuadLattice lattice(integer_matrix(p.gram, "gram"));
  const hyperlattice::LatticeIsometry iso = hyperlattice::verify_isometry(lattice, integer_matrix(p.rows, "row"));
  const hyperlattice::EntropyReport r = hyperlattice::entropy_class(iso);
  put("rank", std::to_string(lattice.rank()));
  put("reference", vector(lattice.reference()));
  put("char_poly", poly(r.char_poly));
  put("entropy", hyperlattice::to_string(r.entropy));
  put("spectral_radius", algebraic(r.spectral_radius));
  put("non_cyclotomic_part", poly(r.non_cyclotomic_part));
  if (r.salem) {
    put("salem.verdict", exactpoly::to_string(r.salem->verdict));
    if (!r.salem->reason.empty()) put("salem.reason", r.salem->reason);
  }
  const auto order = hyperlattice::finite_order_test(iso);
  put("finite_order", order ? std::to_string(*order) : "infinite");
  if (r.entropy == hyperlattice::Entropy::Null) {
    const hyperlattice::NullFixedWitness w = hyperlattice::null_fixed_witness(iso);
    put("null_witness.power", std::to_string(w.power));
    put("null_witness.v", vector(w.v));
    put("null_witness.q", number(w.q));
    return kOk;
  }
  const hyperlattice::PositiveEntropyWitness w = hyperlattice::positive_entropy_witness(iso, o.max_degree);
  put("positive_witness.field", algebraic(w.eigenvalue));
  put("positive_witness.d1", field_vector(w.d1));
  put("positive_witness.d2", field_vector(w.d2));
  put("positive_witness.d", field_vector(w.d));
  put("positive_witness.q11", poly(w.q11));
  put("positive_witness.q22", poly(w.q22));
  put("positive_witness.q12", poly(w.q12));
  put("positive_witness.q_sum", poly(w.q_sum));
  return kOk;
}

int descend_cone(const ProblemFile& p, const Options&, Sink put) {
  const std::size_t dim = p.rows.size();
  const conedyn::ConeEndo e(rational_matrix(p.rows), conedyn::PolyCone(dim, p.generators), p.invariance);
  put("dim", std::to_string(dim));
  put("invariance", p.invariance == conedyn::Invariance::Exact ? "exact" : "forward");
  put("extremal_rays", vector(e.cone().extremal_rays()));
  if (p.invariance == conedyn::Invariance::Exact)
    put("ray_permutation_order", std::to_string(conedyn::ray_permutation(e).order));
  put("amplified", boolean(conedyn::amplified_test(e)));
  if (p.big) {
    const conedyn::DescentTrace t = conedyn::descend(e, *p.big);
    put("descent.steps", std::to_string(t.steps.size()));
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const auto& s = t.steps[i];
      const std::string k = "descent.step." + std::to_string(i + 1) + ".";
      put(k + "power", std::to_string(s.power));
      put(k + "fixed_point", vector(s.fixed_point));
      put(k + "ray", vector(s.ray));
      put(k + "quotient", matrix(s.quotient));
      put(k + "section", matrix(s.section));
      put(k + "induced", matrix(s.induced));
      put(k + "lift_guard", boolean(s.lift_guard));
    }
    for (std::size_t i = 0; i < t.big_class_path.size(); ++i)
      put("descent.big." + std::to_string(i + 1), vector(t.big_class_path[i]));
    put("descent.final_matrix", matrix(t.final_matrix));
    put("descent.final_rays", vector(t.final_rays));
    put("descent.final_amplified", boolean(t.final_amplified));
  }
  if (p.start) {
    const conedyn::PerronLimit l = conedyn::power_limit_ray(e, *p.start);
    constexpr int bits = 30;
    RatVector ray;
    for (double x : l.ray) ray.push_back(dyadic_floor(x, bits));
    put("perron.iterations", std::to_string(l.iterations));
    put("perron.rate_lo", number(dyadic_floor(l.rate, bits)));
    put("perron.rate_hi", number(dyadic_ceil(l.rate, bits)));
    put("perron.ray_lo", vector(ray));
    put("perron.residual_bound", number(dyadic_ceil(l.residual, 40)));
    put("perron.certified", boolean(l.certified));
  }
  return kOk;
}

int poly_analyze(const ProblemFile& p, const Options&, Sink put) {
  const exactpoly::RootLocationSummary s = exactpoly::summarize_roots(p.poly);
  put("degree", std::to_string(s.degree));
  put("distinct_unit_circle_roots", std::to_string(s.distinct_unit_circle_roots));
  put("distinct_real_roots_gt_one", std::to_string(s.distinct_real_roots_gt_one));
  put("cyclotomic_divisors", set(s.cyclotomic_divisors));
  put("is_reciprocal", boolean(s.is_reciprocal));
  put("is_cyclotomic_product", boolean(p.poly.is_monic() && exactpoly::is_cyclotomic_product(p.poly)));
  put("squarefree_part", poly(exactpoly::squarefree_part(p.poly)));
  const auto top = exactpoly::largest_real_root(p.poly);
  put("largest_real_root", top ? algebraic(*top) : "none");
  return kOk;
}

int salem_check(const ProblemFile& p, const Options&, Sink put) {
  const exactpoly::SalemReport r = exactpoly::salem_check(p.poly);
  put("verdict", exactpoly::to_string(r.verdict));
  put("reason", r.reason.empty() ? "none" : r.reason);
  put("irreducibility.certified", boolean(r.irreducibility.certified));
  IntVector primes, degs;
  for (auto q : r.irreducibility.primes_used) primes.emplace_back(static_cast<unsigned long>(q));
  put("irreducibility.primes", vector(primes));
  for (int d : r.irreducibility.surviving_degrees) degs.emplace_back(d);
  put("irreducibility.surviving_degrees", vector(degs));
  return kOk;
}

}  // namespace

RunOutcome run(const std::string& command, const std::string& text, const Options& opts) {
  RunOutcome out;
  auto& env = out.envelope;
  env.tool_version = tool_version();
  env.command = command;
  env.kind = "invalid";
  env.input_digest = "sha256:" + sha256_hex(text);
  Sink put{env.result};
  try {
    if (!is_command(command)) fail(ErrorKind::Domain, "unknown command '" + command + "'");
    const ProblemFile p = parse_problem(text);
    env.kind = to_string(p.kind);
    env.input_digest = "sha256:" + sha256_hex(serialize(p));
    if (command == "classify-abelian") {
      expect_kind(p, ProblemKind::Abelian, command);
      out.exit_code = classify_abelian(p, opts, put);
    } else if (command == "fix-count") {
      expect_kind(p, ProblemKind::Abelian, command);
      out.exit_code = fix_count(p, opts, put);
    } else if (command == "torsion-oracle") {
      expect_kind(p, ProblemKind::Abelian, command);
      out.exit_code = torsion_oracle(p, opts, put);
    } else if (command == "classify-lattice") {
      expect_kind(p, ProblemKind::Lattice, command);
      out.exit_code = classify_lattice(p, opts, put);
    } else if (command == "descend-cone") {
      expect_kind(p, ProblemKind::Cone, command);
      out.exit_code = descend_cone(p, opts, put);
    } else if (command == "poly-analyze") {
      expect_kind(p, ProblemKind::Poly, command);
      out.exit_code = poly_analyze(p, opts, put);
    } else {
      expect_kind(p, ProblemKind::Poly, command);
      out.exit_code = salem_check(p, opts, put);
    }
  } catch (const Error& e) {
    put("error", to_string(e.kind()));
    put("message", e.what());
    out.exit_code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    put("error", to_string(ErrorKind::Internal));
    put("message", e.what());
    out.exit_code = kInternal;
  }
  put("exit_code", std::to_string(out.exit_code));
  return out;
}

RunOutcome run_file(const std::string& command, const std::string& path, const Options& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    RunOutcome out;
    out.envelope = {tool_version(), "none", command, "invalid",
                    {{"error", "Parse"}, {"message", "cannot read '" + path + "'"}, {"exit_code", "2"}}};
    out.exit_code = kInvalidInput;
    return out;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run(command, buf.str(), opts);
}

std::string human_table(const ReportEnvelope& e, bool verbose) {
  constexpr std::size_t max_value = 72;
  std::size_t width = 0;
  for (const auto& [k, v] : e.result) width = std::max(width, k.size());
  std::string out = e.command + " (" + e.kind + ")\n";
  for (const auto& [k, v] : e.result) {
    out += "  " + k + std::string(width - k.size() + 2, ' ');
    out += (!verbose && v.size() > max_value) ? v.substr(0, max_value - 3) + "..." : v;
    out += "\n";
  }
  return out;
}

}  // namespace ampdyn::cli
