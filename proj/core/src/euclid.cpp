#include "impartial/euclid.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "impartial/errors.hpp"

namespace impartial::euclid {

void validate(const EuclidPosition& p) {
  if (p.x < 1 || p.y < 1) throw ArgumentError("Euclid coordinates must be positive");
}

bool below_phi_times(const Integer& t, const Integer& s) { return t * t < t * s + s * s; }

bool above_phi_times(const Integer& t, const Integer& s) { return t * t > t * s + s * s; }

namespace {

// Larger coordinate first; `swapped` records whether that reversed the input.
struct Oriented {
  Integer u;
  Integer v;
  bool swapped;
};

Oriented orient(const EuclidPosition& p) {
  if (p.x >= p.y) return {p.x, p.y, false};
  return {p.y, p.x, true};
}

EuclidPosition restore(Integer u, Integer v, bool swapped) {
  if (swapped) return {std::move(v), std::move(u)};
  return {std::move(u), std::move(v)};
}

// Homogeneous, so valid without dividing by the gcd.
bool p_window(const Integer& u, const Integer& v) { return below_phi_times(u, v) && below_phi_times(v, u); }

}  // namespace

std::vector<EuclidPosition> euclid_successors(const EuclidPosition& p) {
  validate(p);
  std::vector<EuclidPosition> out;
  auto [u, v, swapped] = orient(p);
  for (Integer w = u - v; w > 0; w -= v) out.push_back(restore(w, v, swapped));
  return out;
}

bool is_p_euclid(const EuclidPosition& p) {
  validate(p);
  return p_window(p.x, p.y);
}

SgValue sg_euclid(const EuclidPosition& p) {
  validate(p);
  auto [u, v, swapped] = orient(p);
  return SgValue(Integer((u * u - v * v) / (u * v)));
}

EuclidPosition winning_target(const EuclidPosition& p) {
  validate(p);
  if (is_p_euclid(p)) throw PreconditionError("winning_target requires an N-position");
  auto [u, v, swapped] = orient(p);
  Integer r = u % v;
  std::optional<Integer> found;
  for (const Integer& w : {r, Integer(r + v)}) {
    if (w <= 0 || w >= u) continue;
    if (!p_window(w, v)) continue;
    if (found) throw Error("internal: two P-successors from a Euclid N-position");
    found = w;
  }
  if (!found) throw Error("internal: no P-successor from a Euclid N-position");
  return restore(*found, v, swapped);
}

EuclidPlay euclid_play(const EuclidPosition& p) {
  validate(p);
  const Integer g = boost::integer::gcd(p.x, p.y);
  EuclidPosition cur{p.x / g, p.y / g};
  EuclidPlay play;
  play.trace.push_back(p);
  std::uint64_t steps = 0;
  while (cur.x != cur.y) {
    if (p_window(cur.x, cur.y)) {
      // the only move: subtract the smaller once
      if (cur.x > cur.y) cur.x -= cur.y;
      else cur.y -= cur.x;
    } else {
      cur = winning_target(cur);
    }
    ++steps;
    play.trace.push_back({cur.x * g, cur.y * g});
  }
  play.remoteness = Remoteness(steps);
  return play;
}

Remoteness remoteness_euclid(const EuclidPosition& p) { return euclid_play(p).remoteness; }

std::optional<int> small_r_classifier(const EuclidPosition& p) {
  validate(p);
  if (boost::integer::gcd(p.x, p.y) != 1) throw PreconditionError("small_r_classifier requires gcd(x, y) = 1");
  const Integer& x = p.x;
  const Integer& y = p.y;
  if (x == 1 && y == 1) return 0;
  if (x == 1 || y == 1) return 1;
  if (x - y == 1 || y - x == 1) return 2;
  // x = m*y +- 1 or y = m*x +- 1 with m >= 1
  auto near_multiple = [](const Integer& s, const Integer& t) {
    return (s > t && s % t == 1) || ((s + 1) % t == 0 && s + 1 >= 2 * t);
  };
  if (near_multiple(x, y) || near_multiple(y, x)) return 3;
  return std::nullopt;
}

OracleRules::OracleRules(std::uint64_t max_coord) : max_(max_coord) {
  if (max_coord > 0xFFFF) throw CapacityError("Euclid oracle supports coordinates up to 65535");
}

void OracleRules::successors(const Position& p, std::vector<Position>& out) const {
  auto [x, y] = p;
  if (x > y) {
    for (std::uint64_t w = x - y; w > 0 && w < x; w = w > y ? w - y : 0) out.emplace_back(w, y);
  } else if (y > x) {
    for (std::uint64_t w = y - x; w > 0 && w < y; w = w > x ? w - x : 0) out.emplace_back(x, w);
  }
}

std::vector<OracleRules::Position> OracleRules::successors(const Position& p) const {
  std::vector<Position> out;
  successors(p, out);
  return out;
}

std::size_t OracleRules::index_bound() const { return static_cast<std::size_t>((max_ + 1) * (max_ + 1)); }

std::size_t OracleRules::index_of(const Position& p) const {
  if (p.first > max_ || p.second > max_) throw CapacityError("Euclid oracle coordinate exceeds its bound");
  return static_cast<std::size_t>(p.first * (max_ + 1) + p.second);
}

}  // namespace impartial::euclid
