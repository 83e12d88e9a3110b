#include "ramsey/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "ramsey/errors.hpp"

namespace ramsey {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw MalformedInput("empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) throw MalformedInput("graph6 byte out of range");
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') throw OrderTooLarge("graph6 order beyond 258047");
    if (line.size() < 4) throw MalformedInput("truncated graph6 order field");
    n = ((line[1] - 63L) << 12) | ((line[2] - 63L) << 6) | (line[3] - 63L);
    pos = 4;
  }
  if (n > kMaxOrder) {
    throw OrderTooLarge("graph6 order " + std::to_string(n) + " exceeds the build cap");
  }
  const long pairs = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() != expected) throw MalformedInput("graph6 length does not match its order");

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = line[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    int byte = line[pos + bit / 6] - 63;
    if ((byte & ((1 << (6 - bit % 6)) - 1)) != 0) throw MalformedInput("nonzero graph6 padding");
  }
  return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph6(in);
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_graph6(out, graphs);
}

}  // namespace ramsey
