#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// n_i = number of vertices of degree i. Trailing zero classes are trimmed,
// so two histograms compare equal iff they describe the same degree
// multiset.
class DegreeHistogram {
 public:
  DegreeHistogram() = default;
  explicit DegreeHistogram(std::vector<int> counts);
  // {{degree, count}, ...}
  DegreeHistogram(std::initializer_list<std::pair<int, int>> classes);

  int count(int degree) const {
    return degree < static_cast<int>(counts_.size()) ? counts_[degree] : 0;
  }
  int max_degree() const { return static_cast<int>(counts_.size()) - 1; }
  int order() const;
  int degree_sum() const;
  const std::vector<int>& counts() const { return counts_; }

  // "{n_4:1, n_6:38}"
  std::string to_string() const;

  auto operator<=>(const DegreeHistogram&) const = default;

 private:
  void trim();
  std::vector<int> counts_;
};

}  // namespace ramsey
