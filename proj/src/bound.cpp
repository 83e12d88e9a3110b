#include "ramsey/bound.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Exact:
      return "exact";
    case BoundKind::AtLeast:
      return "atleast";
    case BoundKind::Infinite:
      return "infinite";
  }
  return "?";
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::Theorem1:
      return "theorem1";
    case Provenance::Enumerated:
      return "enumerated";
    case Provenance::Gluing:
      return "gluing";
    case Provenance::Feasibility:
      return "feasibility";
    case Provenance::Imported:
      return "imported";
  }
  return "?";
}

BoundKind parse_bound_kind(std::string_view text) {
  if (text == "exact") return BoundKind::Exact;
  if (text == "atleast") return BoundKind::AtLeast;
  if (text == "infinite") return BoundKind::Infinite;
  throw MalformedInput("unknown bound kind '" + std::string(text) + "'");
}

Provenance parse_provenance(std::string_view text) {
  for (auto p : {Provenance::Theorem1, Provenance::Enumerated, Provenance::Gluing,
                 Provenance::Feasibility, Provenance::Imported}) {
    if (text == to_string(p)) return p;
  }
  throw MalformedInput("unknown provenance '" + std::string(text) + "'");
}

Bound Bound::exact(int value, Provenance p, std::string note) {
  if (value < 0) throw InputError("bound values are nonnegative");
  return Bound{BoundKind::Exact, value, p, std::move(note)};
}

Bound Bound::at_least(int value, Provenance p, std::string note) {
  if (value < 0) throw InputError("bound values are nonnegative");
  return Bound{BoundKind::AtLeast, value, p, std::move(note)};
}

Bound Bound::infinite(Provenance p, std::string note) {
  return Bound{BoundKind::Infinite, 0, p, std::move(note)};
}

std::optional<int> Bound::lower() const {
  if (kind == BoundKind::Infinite) return std::nullopt;
  return value;
}

std::string Bound::describe() const {
  switch (kind) {
    case BoundKind::Exact:
      return "Exact " + std::to_string(value);
    case BoundKind::AtLeast:
      return "AtLeast " + std::to_string(value);
    case BoundKind::Infinite:
      return "Infinite";
  }
  return "?";
}

}  // namespace ramsey
