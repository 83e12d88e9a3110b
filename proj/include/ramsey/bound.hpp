#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ramsey {

enum class BoundKind { Exact, AtLeast, Infinite };
enum class Provenance { Theorem1, Enumerated, Gluing, Feasibility, Imported };

std::string_view to_string(BoundKind kind);
std::string_view to_string(Provenance provenance);
BoundKind parse_bound_kind(std::string_view text);
Provenance parse_provenance(std::string_view text);

// A value of e(3,H,n): exact, a lower bound, or infinite (no such graph).
struct Bound {
  BoundKind kind = BoundKind::AtLeast;
  int value = 0;
  Provenance provenance = Provenance::Imported;
  std::string note;

  static Bound exact(int value, Provenance p, std::string note = {});
  static Bound at_least(int value, Provenance p, std::string note = {});
  static Bound infinite(Provenance p, std::string note = {});

  bool is_exact() const { return kind == BoundKind::Exact; }
  bool is_infinite() const { return kind == BoundKind::Infinite; }
  // Best known lower bound; nullopt for Infinite.
  std::optional<int> lower() const;

  // "Exact 15", "AtLeast 117", "Infinite"
  std::string describe() const;

  bool same_value(const Bound& other) const {
    return kind == other.kind && (kind == BoundKind::Infinite || value == other.value);
  }
};

}  // namespace ramsey
