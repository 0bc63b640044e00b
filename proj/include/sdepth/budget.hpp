#pragma once

#include <chrono>
#include <optional>

namespace sdepth::budget {

// Cooperative per-thread compute budget. The backtracking searches poll
// checkpoint() in their inner loops; when a deadline is set and exceeded they
// abort with Error("timeout", ...). A Scope restores the previous deadline on
// exit, so nested budgets compose.
class Scope {
public:
  explicit Scope(std::optional<long long> timeout_ms);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

private:
  std::optional<std::chrono::steady_clock::time_point> saved_;
};

void checkpoint();

}  // namespace sdepth::budget
