#pragma once

// WYT(a, b): two piles; a move takes eps >= 0 from x and delta >= 0 from y,
// not both zero, with |eps - delta| < a (diagonal) or min(eps, delta) < b.
//
// P-positions are (x_m, y_m) and (y_m, x_m) with x_m = mex_b of all earlier
// x and y values and y_m = x_m + a*m. The table below generates them by
// direct recursion in O(M) for the first M indices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "impartial/integer.hpp"
#include "impartial/values.hpp"

namespace impartial::wythoff {

struct WythoffParams {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
};

/// ArgumentError unless a, b >= 1.
void validate(const WythoffParams& p);

struct WyPosition {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend auto operator<=>(const WyPosition&, const WyPosition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const WyPosition& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

bool is_legal_move(const WyPosition& from, const WyPosition& to, const WythoffParams& p);

/// s_i + b for the first i whose successor gap exceeds b (s_{l+1} = inf);
/// 0 for the empty set. A set whose smallest element exceeds b also gives 0,
/// a case the P-position recursion never produces.
std::uint64_t mex_b(const std::set<std::uint64_t>& s, std::uint64_t b);

/// Append-only prefix of the P-sequence. Not synchronised: extend from one
/// thread, then share read-only.
class WythoffTable {
 public:
  explicit WythoffTable(WythoffParams params);

  const WythoffParams& params() const { return params_; }
  std::size_t size() const { return xs_.size(); }

  /// Extends until the table holds index m.
  void extend_to_index(std::uint64_t m);
  /// Extends until the last x exceeds value.
  void extend_to_value(std::uint64_t value);

  std::uint64_t x(std::uint64_t m);
  std::uint64_t y(std::uint64_t m);

  const std::vector<std::uint64_t>& xs() const { return xs_; }
  const std::vector<std::uint64_t>& ys() const { return ys_; }

  /// Index m with x_m == value, if any.
  std::optional<std::uint64_t> index_of_x(std::uint64_t value);
  /// Index m with y_m == value, if any.
  std::optional<std::uint64_t> index_of_y(std::uint64_t value);
  /// Largest m with x_m <= value.
  std::uint64_t last_index_x_at_most(std::uint64_t value);
  /// Largest m with y_m <= value.
  std::uint64_t last_index_y_at_most(std::uint64_t value);

  /// Generation stops with CapacityError beyond this many entries.
  static constexpr std::size_t kMaxSize = std::size_t{1} << 26;

 private:
  void step();

  WythoffParams params_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> ys_;
  // Every value of the union up to `frontier_` is packed with gaps <= b;
  // ys_[pending_] is the smallest y not yet passed.
  std::uint64_t frontier_ = 0;
  std::size_t pending_ = 1;
};

WythoffTable generate(const WythoffParams& p, std::uint64_t up_to_value);

/// floor(m (2 - a + sqrt(a^2 + 4)) / 2), exact.
Integer fraenkel_closed_form(const Integer& m, const Integer& a);

struct WyClass {
  Outcome outcome;
  /// Index m of the P-position; empty for N-positions.
  std::optional<std::uint64_t> index;
};

WyClass classify_wythoff(const WyPosition& pos, WythoffTable& table);
WyClass classify_wythoff(const WyPosition& pos, const WythoffParams& p);

struct Candidate {
  WyPosition target;
  std::uint64_t index;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Every P-position reachable in one move, sorted by target and at most six.
/// PreconditionError on P-positions.
std::vector<Candidate> candidate_p_targets(const WyPosition& pos, WythoffTable& table);
std::vector<Candidate> candidate_p_targets(const WyPosition& pos, const WythoffParams& p);

/// 2m on (x_m, y_m); otherwise one more than the smallest 2m over the
/// reachable P-positions.
Remoteness remoteness_wythoff(const WyPosition& pos, WythoffTable& table);
Remoteness remoteness_wythoff(const WyPosition& pos, const WythoffParams& p);

/// A successor with remoteness one less; nullopt at (0, 0).
std::optional<WyPosition> optimal_move_wythoff(const WyPosition& pos, WythoffTable& table);

/// All legal successors, sorted, for the generic engine. Dense indexing
/// covers coordinates up to max_coord.
class OracleRules {
 public:
  using Position = std::pair<std::uint64_t, std::uint64_t>;

  OracleRules(WythoffParams params, std::uint64_t max_coord);

  void successors(const Position& p, std::vector<Position>& out) const;
  std::vector<Position> successors(const Position& p) const;
  bool is_terminal(const Position& p) const { return p.first == 0 && p.second == 0; }

  std::size_t index_bound() const;
  std::size_t index_of(const Position& p) const;

 private:
  WythoffParams params_;
  std::uint64_t max_;
};

}  // namespace impartial::wythoff
