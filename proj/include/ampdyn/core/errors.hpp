#pragma once

#include <stdexcept>
#include <string>

namespace ampdyn {

enum class ErrorKind {
  Dimension,
  Domain,
  Parse,
  NotSurjective,
  Unsupported,
  NotIsometry,
  BadSignature,
  NotInvariant,
  NotSalient,
  PreconditionViolated,
  HypothesisViolated,
  NotContractible,
  SearchFailed,
  FieldTooLarge,
  NoConvergence,
  NoneInPositiveCone,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// Internal consistency check. Failing one of these is a bug, not bad input.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::Internal, std::string("invariant violated: ") + what);
}

}  // namespace ampdyn
