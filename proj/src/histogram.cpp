#include "ramsey/histogram.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

DegreeHistogram::DegreeHistogram(std::vector<int> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](int c) { return c < 0; })) {
    throw InputError("negative degree count");
  }
  trim();
}

DegreeHistogram::DegreeHistogram(std::initializer_list<std::pair<int, int>> classes) {
  for (auto [degree, n] : classes) {
    if (degree < 0 || n < 0) throw InputError("negative degree class");
    if (degree >= static_cast<int>(counts_.size())) counts_.resize(degree + 1, 0);
    counts_[degree] += n;
  }
  trim();
}

int DegreeHistogram::order() const {
  int n = 0;
  for (int c : counts_) n += c;
  return n;
}

int DegreeHistogram::degree_sum() const {
  int s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += static_cast<int>(i) * counts_[i];
  return s;
}

std::string DegreeHistogram::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += "n_" + std::to_string(i) + ":" + std::to_string(counts_[i]);
  }
  return out + "}";
}

void DegreeHistogram::trim() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

}  // namespace ramsey
