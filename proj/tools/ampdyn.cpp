#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ampdyn/cli/batch.hpp"
#include "ampdyn/cli/commands.hpp"
#include "ampdyn/cli/corpus.hpp"

namespace cli = ampdyn::cli;

namespace {

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) std::cerr << "ampdyn: cannot write '" << path << "'\n";
  return static_cast<bool>(out);
}

// "1 0; 0 -2" -> rows
std::optional<ampdyn::IntMatrix> parse_gram(const std::string& text) {
  std::vector<ampdyn::RatVector> rows;
  std::stringstream all(text);
  std::size_t i = 0;
  for (std::string row; std::getline(all, row, ';');) {
    ++i;
    std::istringstream in(row);
    ampdyn::RatVector r;
    for (std::string tok; in >> tok;) r.push_back(cli::parse_rational(tok));
    rows.push_back(r);
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) ampdyn::fail(ampdyn::ErrorKind::Parse, "--gram must be a square matrix");
  return cli::integer_matrix(rows, "--gram");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ampdyn: exact dynamical classification of integer-matrix models"};
  app.set_version_flag("--version", cli::tool_version());
  app.require_subcommand(1);

  cli::Options opts;
  std::string input, json_path;
  unsigned parallel = 1;

  for (const auto& name : cli::command_names()) {
    auto* sub = app.add_subcommand(name, "run " + name + " on a problem file");
    sub->add_option("input", input, "problem file")->required();
    sub->add_option("--json", json_path, "write the machine-readable report to PATH");
    sub->add_option("--max-degree", opts.max_degree, "largest number field degree for witnesses")->default_val(16);
    sub->add_flag("--verbose", opts.verbose, "print long values in full");
    if (name == "fix-count" || name == "torsion-oracle")
      sub->add_option("--power", opts.power, "iterate m of f^m")->default_val(1)->check(CLI::PositiveNumber);
    if (name == "torsion-oracle") sub->add_option("--modulus", opts.modulus, "torsion level N")->required();
  }

  auto* batch = app.add_subcommand("batch", "run the default command for every file in a directory");
  batch->add_option("directory", input, "directory of problem files")->required();
  batch->add_option("--parallel", parallel, "worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
  batch->add_option("--json", json_path, "write the machine-readable batch report to PATH");
  batch->add_option("--max-degree", opts.max_degree, "largest number field degree for witnesses")->default_val(16);
  batch->add_flag("--verbose", opts.verbose, "list every file");

  cli::CorpusSpec corpus;
  std::string kind = "abelian", out_dir, gram_text;
  auto* gen = app.add_subcommand("generate-corpus", "write a seeded corpus of problem files");
  gen->add_option("--kind", kind, "abelian, lattice, cone or poly")
      ->check(CLI::IsMember({"abelian", "lattice", "cone", "poly"}));
  gen->add_option("--count", corpus.count, "number of files")->default_val(10);
  gen->add_option("--seed", corpus.seed, "PRNG seed")->default_val(0);
  gen->add_option("--dim", corpus.dim, "dimension (<= 6)")->default_val(3);
  gen->add_option("--bound", corpus.bound, "entry magnitude (<= 9)")->default_val(3);
  gen->add_option("--gram", gram_text, "lattice gram matrix, rows separated by ';'");
  gen->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (batch->parsed()) {
      const cli::BatchResult r = cli::run_batch(input, opts, parallel);
      std::cout << cli::human_summary(r, opts.verbose);
      if (!json_path.empty() && !write_text(json_path, cli::serialize(r))) return cli::kInvalidInput;
      return r.exit_code;
    }
    if (gen->parsed()) {
      corpus.kind = kind == "abelian"   ? cli::ProblemKind::Abelian
                    : kind == "lattice" ? cli::ProblemKind::Lattice
                    : kind == "cone"    ? cli::ProblemKind::Cone
                                        : cli::ProblemKind::Poly;
      if (!gram_text.empty()) corpus.gram = parse_gram(gram_text);
      const auto files = cli::generate_corpus(corpus);
      cli::write_corpus(out_dir, files);
      std::cout << "wrote " << files.size() << " files to " << out_dir << "\n";
      return cli::kOk;
    }
  } catch (const ampdyn::Error& e) {
    std::cerr << "ampdyn: " << e.what() << "\n";
    return cli::exit_code_for(e.kind());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const cli::RunOutcome r = cli::run_file(command, input, opts);
  std::cout << cli::human_table(r.envelope, opts.verbose);
  if (const std::string* msg = r.envelope.find("message")) std::cerr << "ampdyn: " << *msg << "\n";
  if (!json_path.empty() && !write_text(json_path, cli::serialize(r.envelope))) return cli::kInvalidInput;
  return r.exit_code;
}
