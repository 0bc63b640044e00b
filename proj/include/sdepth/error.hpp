#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sdepth {

// Every failure the library reports carries a stable machine-readable kind
// ("ambient-mismatch", "parse-error", ...) next to the human message, so the
// CLI can emit structured diagnostics without string matching.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& message) {
  throw Error(kind, message);
}

// Internal errors mean a verified invariant broke, i.e. a bug in this
// library, not bad input.
[[noreturn]] inline void fail_internal(const std::string& message) {
  throw Error("internal", message);
}

}  // namespace sdepth
