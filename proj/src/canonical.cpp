#include "ramsey/canonical.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>

#include "ramsey/graph6.hpp"

namespace ramsey {

Graph CanonicalForm::graph() const { return decode_graph6(bytes_); }

namespace {

using Cells = std::vector<Row>;

// Refines `cells` until every cell has a uniform neighbour count into each
// splitter. Splitters are processed first-in first-out and new parts are
// queued in cell order, which keeps the result label-invariant.
void refine(const Graph& g, Cells& cells, std::vector<Row> queue) {
  std::size_t head = 0;
  std::array<int, kMaxOrder> hits{};
  while (head < queue.size()) {
    if (cells.size() == static_cast<std::size_t>(g.order())) return;
    const Row splitter = queue[head++];
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      const Row cell = cells[idx];
      if ((cell & (cell - 1)) == 0) continue;
      int lo = INT_MAX;
      int hi = -1;
      bits::for_each(cell, [&](int v) {
        int h = bits::count(g.neighbors(v) & splitter);
        hits[v] = h;
        lo = std::min(lo, h);
        hi = std::max(hi, h);
      });
      if (lo == hi) continue;
      std::vector<Row> parts;
      for (int h = lo; h <= hi; ++h) {
        Row part = 0;
        bits::for_each(cell, [&](int v) {
          if (hits[v] == h) part |= bits::one(v);
        });
        if (part != 0) parts.push_back(part);
      }
      cells[idx] = parts[0];
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1, parts.begin() + 1,
                   parts.end());
      queue.insert(queue.end(), parts.begin(), parts.end());
      idx += parts.size() - 1;
    }
  }
}

constexpr int kNoJump = INT_MAX;

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Cells root{g_.vertex_mask()};
    if (n_ == 0) {
      best_lab_.clear();
      have_best_ = true;
      return;
    }
    refine(g_, root, {g_.vertex_mask()});
    descend(std::move(root), 0);
  }

  CanonicalLabeling result() const {
    CanonicalLabeling out;
    out.label.assign(n_, 0);
    for (int pos = 0; pos < n_; ++pos) out.label[best_lab_[pos]] = pos;
    out.canonical_graph = g_.permuted(out.label);
    out.automorphisms = automorphisms_;
    out.leaves = leaves_;
    return out;
  }

 private:
  int descend(Cells cells, int depth) {
    if (cells.size() == static_cast<std::size_t>(n_)) return leaf(cells);

    std::size_t target = 0;
    int target_size = INT_MAX;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int s = bits::count(cells[i]);
      if (s > 1 && s < target_size) {
        target_size = s;
        target = i;
      }
    }
    const Row choices = cells[target];
    std::vector<int> tried;
    for (Row rest = choices; rest != 0; rest &= rest - 1) {
      const int w = bits::lowest(rest);
      if (!tried.empty() && equivalent_to_tried(w, tried)) continue;
      Cells child = cells;
      child[target] = bits::one(w);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, choices & ~bits::one(w));
      refine(g_, child, {bits::one(w)});
      path_.push_back(w);
      int jump = descend(std::move(child), depth + 1);
      path_.pop_back();
      tried.push_back(w);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  // True when w shares an orbit with an explored sibling under the
  // automorphisms found so far that fix the current path pointwise.
  bool equivalent_to_tried(int w, const std::vector<int>& tried) const {
    if (automorphisms_.empty()) return false;
    std::array<int, kMaxOrder> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) {
        int a = find(v);
        int b = find(gamma[v]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    int root = find(w);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == root; });
  }

  int leaf(const Cells& cells) {
    ++leaves_;
    std::vector<int> lab(n_);
    std::array<int, kMaxOrder> pos{};
    for (int p = 0; p < n_; ++p) {
      lab[p] = bits::lowest(cells[p]);
      pos[lab[p]] = p;
    }
    std::vector<Row> rows(n_);
    for (int p = 0; p < n_; ++p) {
      Row r = 0;
      bits::for_each(g_.neighbors(lab[p]), [&](int u) { r |= bits::one(pos[u]); });
      rows[p] = r;
    }

    if (!have_best_) {
      have_best_ = true;
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (rows == first_rows_) {
      record_automorphism(first_lab_, lab);
      return common_prefix(first_path_);
    }
    if (rows < best_rows_) {
      best_lab_ = std::move(lab);
      best_rows_ = std::move(rows);
      best_path_ = path_;
      return kNoJump;
    }
    if (rows == best_rows_) {
      record_automorphism(best_lab_, lab);
      return common_prefix(best_path_);
    }
    return kNoJump;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int p = 0; p < n_; ++p) gamma[from[p]] = to[p];
    automorphisms_.push_back(std::move(gamma));
  }

  int common_prefix(const std::vector<int>& other) const {
    int l = 0;
    while (l < static_cast<int>(path_.size()) && l < static_cast<int>(other.size()) &&
           path_[l] == other[l]) {
      ++l;
    }
    return l;
  }

  const Graph& g_;
  const int n_;
  bool have_best_ = false;
  std::vector<int> path_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<Row> first_rows_, best_rows_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::vector<int>> automorphisms_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::vector<Row> equitable_partition(const Graph& g) {
  Cells cells{g.vertex_mask()};
  if (g.order() == 0) return {};
  refine(g, cells, {g.vertex_mask()});
  return cells;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  Search search(g);
  search.run();
  return search.result();
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm(encode_graph6(canonical_labeling(g).canonical_graph));
}

}  // namespace ramsey
