#include "ramsey/budget.hpp"

#include <cstdlib>
#include <string>

namespace ramsey {

ResourceBudget ResourceBudget::from_environment() {
  ResourceBudget b;
  if (const char* nodes = std::getenv("RAMSEY_MAX_NODES")) b.max_nodes = std::stoull(nodes);
  if (const char* secs = std::getenv("RAMSEY_MAX_SECONDS")) {
    b.max_time = std::chrono::seconds(std::stoll(secs));
  }
  return b;
}

SearchGuard::SearchGuard(ResourceBudget budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {}

bool SearchGuard::charge(std::uint64_t nodes) {
  if (exhausted()) return false;
  std::uint64_t before = nodes_.fetch_add(nodes, std::memory_order_relaxed);
  std::uint64_t after = before + nodes;
  if (after > budget_.max_nodes) {
    exhausted_ = true;
    return false;
  }
  // Clock reads are throttled to every 4096 nodes.
  if ((before >> 12) != (after >> 12) &&
      std::chrono::steady_clock::now() - start_ > budget_.max_time) {
    exhausted_ = true;
    return false;
  }
  return true;
}

double SearchGuard::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

}  // namespace ramsey
