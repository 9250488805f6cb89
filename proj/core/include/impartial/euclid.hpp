#pragma once

// Game Euclid: from (x, y) with x > y, move to (x - l*y, y) for any l >= 1
// keeping the difference positive; (g, g) is terminal. Golden-ratio tests are
// done with the quadratic form t < phi*s  <=>  t^2 < t*s + s^2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "impartial/integer.hpp"
#include "impartial/values.hpp"

namespace impartial::euclid {

struct EuclidPosition {
  Integer x;
  Integer y;

  friend bool operator==(const EuclidPosition&, const EuclidPosition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const EuclidPosition& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

/// ArgumentError unless both coordinates are positive.
void validate(const EuclidPosition& p);

/// t < phi * s for positive t, s.
bool below_phi_times(const Integer& t, const Integer& s);
/// t > phi * s for positive t, s.
bool above_phi_times(const Integer& t, const Integer& s);

/// Successors in the caller's orientation, by increasing multiple l.
std::vector<EuclidPosition> euclid_successors(const EuclidPosition& p);

bool is_p_euclid(const EuclidPosition& p);

/// floor((u^2 - v^2) / (u v)) with u = max, v = min.
SgValue sg_euclid(const EuclidPosition& p);

/// The unique P-successor of an N-position. PreconditionError on P-positions.
EuclidPosition winning_target(const EuclidPosition& p);

struct EuclidPlay {
  Remoteness remoteness;
  /// Start position through the terminal (g, g), in the caller's coordinates.
  std::vector<EuclidPosition> trace;
};

/// Simulates the unique optimal play.
EuclidPlay euclid_play(const EuclidPosition& p);
Remoteness remoteness_euclid(const EuclidPosition& p);

/// Remoteness when it is at most 3, nullopt otherwise. PreconditionError
/// unless gcd(x, y) = 1.
std::optional<int> small_r_classifier(const EuclidPosition& p);

/// Raw Euclid rules over machine-size coordinates for the generic engine.
/// Coordinates are not divided by their gcd. Dense indexing covers
/// coordinates up to max_coord.
class OracleRules {
 public:
  using Position = std::pair<std::uint64_t, std::uint64_t>;

  explicit OracleRules(std::uint64_t max_coord);

  void successors(const Position& p, std::vector<Position>& out) const;
  std::vector<Position> successors(const Position& p) const;
  bool is_terminal(const Position& p) const { return p.first == p.second; }

  std::size_t index_bound() const;
  std::size_t index_of(const Position& p) const;

 private:
  std::uint64_t max_;
};

}  // namespace impartial::euclid
