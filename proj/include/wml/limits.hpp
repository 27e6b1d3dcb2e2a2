#pragma once

#include <stdexcept>
#include <string>

namespace wml {

/// A configured resource cap was exceeded. Callers report "undecided";
/// a cap never turns into a numeric answer.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer invariant that may be infinite, above a search cap, or undecided.
struct Extended {
  enum class Kind { Finite, Infinite, AboveCap, Undecided };
  Kind kind = Kind::Undecided;
  long value = 0;  // the number for Finite, the cap for AboveCap
  std::string reason;

  static Extended finite(long v) { return {Kind::Finite, v, {}}; }
  static Extended infinite() { return {Kind::Infinite, 0, {}}; }
  static Extended above(long cap) { return {Kind::AboveCap, cap, {}}; }
  static Extended undecided(std::string why) { return {Kind::Undecided, 0, std::move(why)}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_undecided() const { return kind == Kind::Undecided; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Finite: return std::to_string(value);
      case Kind::Infinite: return "inf";
      case Kind::AboveCap: return ">" + std::to_string(value);
      case Kind::Undecided: return "undecided";
    }
    return "undecided";
  }

  friend bool operator==(const Extended& a, const Extended& b) { return a.kind == b.kind && a.value == b.value; }
};

}  // namespace wml
