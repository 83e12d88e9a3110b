#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace ramsey {

struct ResourceBudget {
  std::uint64_t max_nodes = 1'000'000'000;
  std::chrono::seconds max_time{3600};

  // Defaults overridden by RAMSEY_MAX_NODES / RAMSEY_MAX_SECONDS when set.
  static ResourceBudget from_environment();
};

// Shared node/time meter for one job. Once exhausted it stays exhausted and
// every search consulting it winds down, leaving its result incomplete.
class SearchGuard {
 public:
  explicit SearchGuard(ResourceBudget budget = {});

  // Accounts for `nodes` search nodes; false once the budget is spent.
  bool charge(std::uint64_t nodes = 1);
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  double elapsed_seconds() const;

 private:
  ResourceBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

struct RunOptions {
  int workers = 1;
  ResourceBudget budget;
};

}  // namespace ramsey
