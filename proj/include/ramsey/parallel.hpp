#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ramsey/canonical.hpp"

namespace ramsey {

// Runs body(i) for i in [0, count) on `workers` threads. Items are handed
// out dynamically; with one worker they run in index order on the caller.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  const int extra = static_cast<int>(std::min<std::size_t>(count, workers)) - 1;
  for (int w = 0; w < extra; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

// Canonical-form set safe under concurrent insertion. Its contents do not
// depend on insertion order; sorted() gives the deterministic view.
class FormSet {
 public:
  FormSet() : shards_(kShards) {}

  bool insert(CanonicalForm form) {
    auto& shard = shards_[std::hash<CanonicalForm>{}(form) % kShards];
    std::lock_guard lock(shard.mutex);
    return shard.forms.insert(std::move(form)).second;
  }

  bool contains(const CanonicalForm& form) const {
    auto& shard = shards_[std::hash<CanonicalForm>{}(form) % kShards];
    std::lock_guard lock(shard.mutex);
    return shard.forms.count(form) != 0;
  }

  std::size_t size() const {
    std::size_t s = 0;
    for (auto& shard : shards_) {
      std::lock_guard lock(shard.mutex);
      s += shard.forms.size();
    }
    return s;
  }

  std::vector<CanonicalForm> sorted() const {
    std::vector<CanonicalForm> out;
    for (auto& shard : shards_) {
      std::lock_guard lock(shard.mutex);
      out.insert(out.end(), shard.forms.begin(), shard.forms.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_set<CanonicalForm> forms;
  };
  mutable std::vector<Shard> shards_;
};

}  // namespace ramsey
