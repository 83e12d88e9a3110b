#include "ramsey/etable.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::string cell(int k, int n) {
  return "(K=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  auto end = s.find_last_not_of(ws);
  s.erase(end == std::string::npos ? 0 : end + 1);
  return s;
}

}  // namespace

std::optional<Bound> ETable::get(int k, int n) const {
  if (auto it = entries_.find({k, n}); it != entries_.end()) return it->second;
  if (n >= 0 && n <= k - 1) return Bound::exact(0, Provenance::Theorem1, "fewer than K vertices");
  auto first = entries_.lower_bound({k, 0});
  for (auto it = first; it != entries_.end() && it->first.first == k && it->first.second < n; ++it) {
    if (it->second.is_infinite())
      return Bound::infinite(it->second.provenance, "above R bound " + std::to_string(it->first.second));
  }
  return std::nullopt;
}

void ETable::merge(int k, int n, const Bound& b) {
  auto it = entries_.find({k, n});
  if (it == entries_.end()) {
    entries_.emplace(std::make_pair(k, n), b);
    return;
  }
  Bound& old = it->second;
  auto conflict = [&] {
    throw ExactConflict("conflicting bounds at " + cell(k, n) + ": " + old.describe() + " vs " +
                        b.describe());
  };
  switch (old.kind) {
    case BoundKind::Exact:
      if (b.is_infinite()) conflict();
      if (b.is_exact() && b.value != old.value) conflict();
      if (!b.is_exact() && b.value > old.value) conflict();
      return;
    case BoundKind::Infinite:
      if (b.is_exact()) conflict();
      return;
    case BoundKind::AtLeast:
      if (b.is_exact() && b.value < old.value) conflict();
      if (b.is_exact() || b.is_infinite() || b.value > old.value) old = b;
      return;
  }
}

void ETable::merge(const ETable& other) {
  for (const auto& [key, b] : other.entries_) merge(key.first, key.second, b);
}

std::optional<int> ETable::ramsey_upper(int k) const {
  for (auto it = entries_.lower_bound({k, 0}); it != entries_.end() && it->first.first == k; ++it) {
    if (it->second.is_infinite()) return it->first.second;
  }
  return std::nullopt;
}

std::vector<std::string> ETable::invariant_violations() const {
  std::vector<std::string> out;
  const std::pair<int, int>* prev_key = nullptr;
  const Bound* prev = nullptr;
  for (const auto& [key, b] : entries_) {
    if (prev_key && prev_key->first == key.first) {
      if (prev->is_infinite() && !b.is_infinite())
        out.push_back("finite entry " + cell(key.first, key.second) + " above an Infinite one");
      else if (!prev->is_infinite() && !b.is_infinite() && b.is_exact() && b.value < prev->value)
        out.push_back("value decreases at " + cell(key.first, key.second));
    }
    prev_key = &key;
    prev = &b;
  }
  return out;
}

ETable ETable::read(std::istream& in) {
  ETable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    // The note is the remainder and may contain commas.
    for (int i = 0; i < 5 && std::getline(ss, f, ','); ++i) fields.push_back(trim(f));
    std::string note;
    std::getline(ss, note);
    if (fields.size() < 5)
      throw MalformedInput("ledger line " + std::to_string(lineno) + ": expected 6 fields");
    try {
      int k = std::stoi(fields[0]);
      int n = std::stoi(fields[1]);
      BoundKind kind = parse_bound_kind(fields[2]);
      int value = kind == BoundKind::Infinite || fields[3].empty() ? 0 : std::stoi(fields[3]);
      Provenance p = parse_provenance(fields[4]);
      Bound b{kind, value, p, trim(note)};
      if (value < 0 || k < 1 || n < 0) throw MalformedInput("negative field");
      t.merge(k, n, b);
    } catch (const std::invalid_argument&) {
      throw MalformedInput("ledger line " + std::to_string(lineno) + ": bad number");
    } catch (const std::out_of_range&) {
      throw MalformedInput("ledger line " + std::to_string(lineno) + ": number out of range");
    } catch (const MalformedInput& e) {
      throw MalformedInput("ledger line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return t;
}

ETable ETable::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open ledger " + path);
  return read(in);
}

void ETable::write(std::ostream& out) const {
  out << "# K,n,kind,value,provenance,note\n";
  for (const auto& [key, b] : entries_) {
    out << key.first << ',' << key.second << ',' << to_string(b.kind) << ',';
    if (!b.is_infinite()) out << b.value;
    out << ',' << to_string(b.provenance) << ',' << b.note << '\n';
  }
}

void ETable::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write ledger " + path);
  write(out);
}

std::string ETable::grid() const {
  std::set<int> ks, ns;
  for (const auto& [key, b] : entries_) {
    ks.insert(key.first);
    ns.insert(key.second);
  }
  std::ostringstream out;
  out << std::setw(4) << "n";
  for (int k : ks) out << std::setw(7) << ("K=" + std::to_string(k));
  out << '\n';
  for (int n : ns) {
    out << std::setw(4) << n;
    for (int k : ks) {
      auto it = entries_.find({k, n});
      std::string text;
      if (it != entries_.end()) {
        const Bound& b = it->second;
        text = b.is_infinite() ? "inf" : (b.is_exact() ? "" : ">=") + std::to_string(b.value);
      }
      out << std::setw(7) << text;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ramsey
