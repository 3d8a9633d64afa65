#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ampdyn::cli {

using Field = std::pair<std::string, std::string>;

// Machine-readable report: "key: value" lines, header keys first, result keys in emission order.
struct ReportEnvelope {
  std::string tool_version;
  std::string input_digest;  // "sha256:<hex>" of the canonical problem text
  std::string command;
  std::string kind;
  std::vector<Field> result;  // keys without the "result." prefix

  const std::string* find(std::string_view key) const;
  bool operator==(const ReportEnvelope&) const = default;
};

std::string serialize(const ReportEnvelope& e);
// Inverse of serialize; throws Error(Parse) naming the offending line.
ReportEnvelope parse_envelope(std::string_view text);

std::string sha256_hex(std::string_view bytes);
const char* tool_version();

}  // namespace ampdyn::cli
