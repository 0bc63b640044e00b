#include "sdepth/budget.hpp"

#include "sdepth/error.hpp"

namespace sdepth::budget {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;
}  // namespace

Scope::Scope(std::optional<long long> timeout_ms) : saved_(g_deadline) {
  if (timeout_ms && *timeout_ms > 0)
    g_deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(*timeout_ms);
  else
    g_deadline.reset();
}

Scope::~Scope() { g_deadline = saved_; }

void checkpoint() {
  if (g_deadline && std::chrono::steady_clock::now() > *g_deadline)
    fail("timeout", "computation exceeded the configured time budget");
}

}  // namespace sdepth::budget
