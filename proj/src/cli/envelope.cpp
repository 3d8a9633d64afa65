#include "ampdyn/cli/envelope.hpp"

#include <openssl/evp.h>

#include <array>
#include <sstream>

#include "ampdyn/core/errors.hpp"

namespace ampdyn::cli {

const char* tool_version() { return AMPDYN_VERSION; }

const std::string* ReportEnvelope::find(std::string_view key) const {
  for (const auto& [k, v] : result)
    if (k == key) return &v;
  return nullptr;
}

std::string serialize(const ReportEnvelope& e) {
  std::string out;
  out += "tool_version: " + e.tool_version + "\n";
  out += "input_digest: " + e.input_digest + "\n";
  out += "command: " + e.command + "\n";
  out += "kind: " + e.kind + "\n";
  for (const auto& [k, v] : e.result) out += "result." + k + ": " + v + "\n";
  return out;
}

ReportEnvelope parse_envelope(std::string_view text) {
  ReportEnvelope e;
  static constexpr std::array<const char*, 4> header = {"tool_version", "input_digest", "command", "kind"};
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto sep = line.find(": ");
    if (sep == std::string::npos)
      fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ", field 1: expected 'key: value'");
    std::string key = line.substr(0, sep), value = line.substr(sep + 2);
    if (line_no <= header.size()) {
      if (key != header[line_no - 1])
        fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ", field 1: expected '" + header[line_no - 1] + "'");
      std::string* slot[] = {&e.tool_version, &e.input_digest, &e.command, &e.kind};
      *slot[line_no - 1] = value;
      continue;
    }
    if (key.rfind("result.", 0) != 0)
      fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ", field 1: expected a 'result.' key");
    e.result.emplace_back(key.substr(7), value);
  }
  if (line_no < header.size()) fail(ErrorKind::Parse, "line " + std::to_string(line_no + 1) + ", field 1: truncated header");
  return e;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::Internal, "sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace ampdyn::cli
