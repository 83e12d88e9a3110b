#include "ramsey/pattern.hpp"

#include <charconv>

#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

Pattern Pattern::max_edges(int size, int max_edges) {
  if (size < 1) throw InputError("pattern size must be positive");
  if (max_edges < 0) throw InputError("edge allowance must be nonnegative");
  Pattern p;
  p.shape_ = Shape::MaxEdges;
  p.size_ = size;
  p.max_edges_ = max_edges;
  return p;
}

Pattern Pattern::explicit_complement(Graph complement) {
  if (complement.order() < 1) throw InputError("explicit complement pattern needs a vertex");
  Pattern p;
  p.shape_ = Shape::ExplicitComplement;
  p.size_ = complement.order();
  p.complement_ = std::move(complement);
  return p;
}

Pattern Pattern::parse(std::string_view text) {
  constexpr std::string_view kCompl = "compl:";
  if (text.starts_with(kCompl)) {
    auto graphs = read_graph6_file(std::string(text.substr(kCompl.size())));
    if (graphs.empty()) throw MalformedInput("pattern file holds no graph");
    return explicit_complement(graphs.front());
  }
  if (text.size() < 2 || (text[0] != 'J' && text[0] != 'K')) {
    throw InputError("unrecognised pattern '" + std::string(text) + "'");
  }
  int k = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("unrecognised pattern '" + std::string(text) + "'");
  }
  return text[0] == 'J' ? near_complete(k) : complete(k);
}

Pattern Pattern::shrink() const {
  if (!is_max_edges()) throw UnsupportedPattern("shrink needs a MaxEdges pattern");
  if (size_ < 2) throw InputError("cannot shrink a one-vertex pattern");
  return max_edges(size_ - 1, max_edges_);
}

Pattern Pattern::grow() const {
  if (!is_max_edges()) throw UnsupportedPattern("grow needs a MaxEdges pattern");
  return max_edges(size_ + 1, max_edges_);
}

std::string Pattern::name() const {
  if (shape_ == Shape::ExplicitComplement) return "compl:" + encode_graph6(complement_);
  switch (max_edges_) {
    case 0:
      return "K" + std::to_string(size_);
    case 1:
      return "J" + std::to_string(size_);
    default:
      return "E" + std::to_string(size_) + "t" + std::to_string(max_edges_);
  }
}

bool Pattern::operator==(const Pattern& other) const {
  return shape_ == other.shape_ && size_ == other.size_ && max_edges_ == other.max_edges_ &&
         complement_ == other.complement_;
}

}  // namespace ramsey
