#pragma once

#include <cstdint>
#include <ostream>

#include "impartial/integer.hpp"

namespace impartial {

enum class Outcome { P, N };

inline const char* to_string(Outcome outcome) {
  return outcome == Outcome::P ? "P" : "N";
}

/// Smith's remoteness: even values are P-positions (the loser resists that
/// many moves), odd values are N-positions (the winner needs that many).
struct Remoteness {
  Integer value;

  Remoteness() = default;
  explicit Remoteness(Integer v) : value(std::move(v)) {}
  explicit Remoteness(std::uint64_t v) : value(v) {}

  Outcome outcome() const {
    return (value & 1) == 0 ? Outcome::P : Outcome::N;
  }
  bool is_p() const { return outcome() == Outcome::P; }

  friend bool operator==(const Remoteness& a, const Remoteness& b) {
    return a.value == b.value;
  }
  friend bool operator<(const Remoteness& a, const Remoteness& b) {
    return a.value < b.value;
  }
  friend std::ostream& operator<<(std::ostream& os, const Remoteness& r) {
    return os << r.value;
  }
};

/// Sprague-Grundy value; zero exactly on P-positions.
struct SgValue {
  Integer value;

  SgValue() = default;
  explicit SgValue(Integer v) : value(std::move(v)) {}
  explicit SgValue(std::uint64_t v) : value(v) {}

  Outcome outcome() const { return value == 0 ? Outcome::P : Outcome::N; }

  friend bool operator==(const SgValue& a, const SgValue& b) {
    return a.value == b.value;
  }
  friend std::ostream& operator<<(std::ostream& os, const SgValue& g) {
    return os << g.value;
  }
};

}  // namespace impartial
