#include "ampdyn/cli/batch.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace ampdyn::cli {

namespace fs = std::filesystem;

namespace {

RunOutcome process(const fs::path& path, const Options& opts) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::string command = "classify-abelian";
  try {
    command = default_command(parse_problem(text).kind);
  } catch (const Error&) {
    // run() reports the parse error itself
  }
  return run(command, text, opts);
}

std::vector<Field> summarize(const std::vector<BatchEntry>& entries) {
  std::map<std::string, long> counts;
  long failed = 0;
  auto flag = [&](const RunOutcome& o, const char* key, const char* want, const std::string& name) {
    const std::string* v = o.envelope.find(key);
    counts[name] += (v && *v == want) ? 1 : 0;
  };
  for (const auto& e : entries) {
    const RunOutcome& o = e.outcome;
    if (o.exit_code != kOk) ++failed;
    const std::string& kind = o.envelope.kind;
    ++counts[kind + ".files"];
    if (o.exit_code != kOk) ++counts[kind + ".failed"];
    if (kind == "abelian") {
      flag(o, "amplified", "true", "abelian.amplified");
      flag(o, "pcd", "true", "abelian.pcd");
      flag(o, "entropy", "positive", "abelian.entropy_positive");
    } else if (kind == "lattice") {
      flag(o, "entropy", "positive", "lattice.entropy_positive");
      flag(o, "salem.verdict", "Salem", "lattice.salem");
    } else if (kind == "cone") {
      flag(o, "amplified", "true", "cone.amplified");
      flag(o, "descent.final_amplified", "true", "cone.final_amplified");
    } else if (kind == "poly") {
      flag(o, "is_reciprocal", "true", "poly.reciprocal");
      flag(o, "is_cyclotomic_product", "true", "poly.cyclotomic_product");
    }
  }
  std::vector<Field> out = {{"files", std::to_string(entries.size())}, {"failed", std::to_string(failed)}};
  for (const auto& [k, v] : counts) out.emplace_back(k, std::to_string(v));
  return out;
}

}  // namespace

BatchResult run_batch(const std::string& dir, const Options& opts, unsigned parallel) {
  if (!fs::is_directory(dir)) fail(ErrorKind::Domain, "'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir))
    if (ent.is_regular_file()) files.push_back(ent.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  BatchResult result;
  result.entries.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();)
      result.entries[i] = {files[i].filename().string(), process(files[i], opts)};
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(files.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : result.entries) result.exit_code = std::max(result.exit_code, e.outcome.exit_code);
  result.summary = summarize(result.entries);
  return result;
}

std::string serialize(const BatchResult& b) {
  std::string out;
  for (const auto& e : b.entries) out += "file: " + e.file + "\n" + serialize(e.outcome.envelope) + "\n";
  for (const auto& [k, v] : b.summary) out += "summary." + k + ": " + v + "\n";
  return out;
}

std::string human_summary(const BatchResult& b, bool verbose) {
  std::size_t width = 4;
  for (const auto& e : b.entries) width = std::max(width, e.file.size());
  std::string out;
  for (const auto& e : b.entries) {
    if (!verbose && e.outcome.exit_code == kOk) continue;
    const auto& env = e.outcome.envelope;
    out += e.file + std::string(width - e.file.size() + 2, ' ') + env.command + "  exit " +
           std::to_string(e.outcome.exit_code);
    if (const std::string* err = env.find("error")) out += "  " + *err + ": " + *env.find("message");
    out += "\n";
  }
  std::size_t kw = 0;
  for (const auto& [k, v] : b.summary) kw = std::max(kw, k.size());
  out += "summary\n";
  for (const auto& [k, v] : b.summary) out += "  " + k + std::string(kw - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace ampdyn::cli
