#include "impartial/wythoff.hpp"

#include <algorithm>
#include <string>

#include "impartial/errors.hpp"

namespace impartial::wythoff {

void validate(const WythoffParams& p) {
  if (p.a < 1 || p.b < 1) throw ArgumentError("WYT parameters a and b must be positive");
}

bool is_legal_move(const WyPosition& from, const WyPosition& to, const WythoffParams& p) {
  if (to.x > from.x || to.y > from.y) return false;
  const std::uint64_t eps = from.x - to.x;
  const std::uint64_t delta = from.y - to.y;
  if (eps + delta == 0) return false;
  const std::uint64_t gap = eps > delta ? eps - delta : delta - eps;
  return gap < p.a || std::min(eps, delta) < p.b;
}

std::uint64_t mex_b(const std::set<std::uint64_t>& s, std::uint64_t b) {
  if (s.empty()) return 0;
  if (*s.begin() > b) return 0;  // outside the recursion's usage
  auto it = s.begin();
  while (true) {
    auto next = std::next(it);
    if (next == s.end() || *next - *it > b) return *it + b;
    it = next;
  }
}

WythoffTable::WythoffTable(WythoffParams params) : params_(params) {
  validate(params_);
  xs_.push_back(0);
  ys_.push_back(0);
}

void WythoffTable::step() {
  if (xs_.size() >= kMaxSize) {
    throw CapacityError("WYT table limit of " + std::to_string(kMaxSize) + " entries reached");
  }
  const std::uint64_t b = params_.b;
  // x values are consumed as they are produced; only pending y values can
  // sit above the frontier, and they arrive in increasing order.
  while (pending_ < ys_.size() && ys_[pending_] <= frontier_ + b) {
    frontier_ = std::max(frontier_, ys_[pending_]);
    ++pending_;
  }
  const std::uint64_t m = xs_.size();
  const std::uint64_t x = frontier_ + b;
  xs_.push_back(x);
  ys_.push_back(x + params_.a * m);
  frontier_ = x;
}

void WythoffTable::extend_to_index(std::uint64_t m) {
  while (xs_.size() <= m) step();
}

void WythoffTable::extend_to_value(std::uint64_t value) {
  while (xs_.back() <= value) step();
}

std::uint64_t WythoffTable::x(std::uint64_t m) {
  extend_to_index(m);
  return xs_[m];
}

std::uint64_t WythoffTable::y(std::uint64_t m) {
  extend_to_index(m);
  return ys_[m];
}

std::optional<std::uint64_t> WythoffTable::index_of_x(std::uint64_t value) {
  extend_to_value(value);
  auto it = std::lower_bound(xs_.begin(), xs_.end(), value);
  if (it != xs_.end() && *it == value) return static_cast<std::uint64_t>(it - xs_.begin());
  return std::nullopt;
}

std::optional<std::uint64_t> WythoffTable::index_of_y(std::uint64_t value) {
  extend_to_value(value);
  auto it = std::lower_bound(ys_.begin(), ys_.end(), value);
  if (it != ys_.end() && *it == value) return static_cast<std::uint64_t>(it - ys_.begin());
  return std::nullopt;
}

std::uint64_t WythoffTable::last_index_x_at_most(std::uint64_t value) {
  extend_to_value(value);
  auto it = std::upper_bound(xs_.begin(), xs_.end(), value);
  return static_cast<std::uint64_t>(it - xs_.begin()) - 1;
}

std::uint64_t WythoffTable::last_index_y_at_most(std::uint64_t value) {
  extend_to_value(value);
  auto it = std::upper_bound(ys_.begin(), ys_.end(), value);
  return static_cast<std::uint64_t>(it - ys_.begin()) - 1;
}

WythoffTable generate(const WythoffParams& p, std::uint64_t up_to_value) {
  WythoffTable table(p);
  table.extend_to_value(up_to_value);
  return table;
}

Integer fraenkel_closed_form(const Integer& m, const Integer& a) {
  if (m < 0) throw ArgumentError("fraenkel_closed_form needs m >= 0");
  if (a < 1) throw ArgumentError("fraenkel_closed_form needs a >= 1");
  // sqrt(a^2 + 4) is irrational for a >= 1, so floor((c + sqrt(D)) / 2)
  // equals floor((c + isqrt(D)) / 2).
  const Integer c = m * (2 - a);
  const Integer d = isqrt(m * m * (a * a + 4));
  Integer sum = c + d;
  Integer q = sum / 2;
  if (sum < 0 && sum % 2 != 0) q -= 1;
  return q;
}

WyClass classify_wythoff(const WyPosition& pos, WythoffTable& table) {
  const WythoffParams& p = table.params();
  const std::uint64_t lo = std::min(pos.x, pos.y);
  const std::uint64_t hi = std::max(pos.x, pos.y);
  const std::uint64_t d = hi - lo;
  if (d % p.a != 0) return {Outcome::N, std::nullopt};
  const std::uint64_t m = d / p.a;
  // x_m >= b*m, so an index beyond lo/b cannot match
  if (m > lo / p.b) return {Outcome::N, std::nullopt};
  if (table.x(m) == lo) return {Outcome::P, m};
  return {Outcome::N, std::nullopt};
}

WyClass classify_wythoff(const WyPosition& pos, const WythoffParams& p) {
  WythoffTable table(p);
  return classify_wythoff(pos, table);
}

std::vector<Candidate> candidate_p_targets(const WyPosition& pos, WythoffTable& table) {
  if (classify_wythoff(pos, table).outcome == Outcome::P) {
    throw PreconditionError("candidate_p_targets requires an N-position");
  }
  const WythoffParams& p = table.params();
  std::vector<Candidate> out;
  auto consider = [&](WyPosition t, std::uint64_t m) {
    if (is_legal_move(pos, t, p)) out.push_back({t, m});
  };
  const bool flipped = pos.x > pos.y;
  const std::uint64_t lo = std::min(pos.x, pos.y);
  const std::uint64_t hi = std::max(pos.x, pos.y);

  // diagonal
  const std::uint64_t l = (hi - lo) / p.a;
  for (std::uint64_t m : {l, l + 1}) {
    if (m > lo / p.b) continue;
    WyPosition t{table.x(m), table.y(m)};
    if (flipped) std::swap(t.x, t.y);
    consider(t, m);
  }

  // one coordinate lands in (c - b, c]; a window holds at most one x value
  // and at most one y value
  auto in_window = [&](std::uint64_t v, std::uint64_t c) { return v <= c && v + p.b > c; };
  {
    std::uint64_t s = table.last_index_x_at_most(pos.x);
    if (in_window(table.x(s), pos.x)) consider({table.x(s), table.y(s)}, s);
    std::uint64_t t = table.last_index_y_at_most(pos.x);
    if (in_window(table.y(t), pos.x)) consider({table.y(t), table.x(t)}, t);
  }
  {
    std::uint64_t s = table.last_index_x_at_most(pos.y);
    if (in_window(table.x(s), pos.y)) consider({table.y(s), table.x(s)}, s);
    std::uint64_t t = table.last_index_y_at_most(pos.y);
    if (in_window(table.y(t), pos.y)) consider({table.x(t), table.y(t)}, t);
  }

  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.target < b.target; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Candidate> candidate_p_targets(const WyPosition& pos, const WythoffParams& p) {
  WythoffTable table(p);
  return candidate_p_targets(pos, table);
}

namespace {

const Candidate& best_candidate(const std::vector<Candidate>& cands) {
  if (cands.empty()) throw Error("internal: WYT N-position with no reachable P-position");
  return *std::min_element(cands.begin(), cands.end(),
                           [](const Candidate& a, const Candidate& b) { return a.index < b.index; });
}

}  // namespace

Remoteness remoteness_wythoff(const WyPosition& pos, WythoffTable& table) {
  WyClass c = classify_wythoff(pos, table);
  if (c.outcome == Outcome::P) return Remoteness(Integer(*c.index) * 2);
  const Candidate& best = best_candidate(candidate_p_targets(pos, table));
  return Remoteness(Integer(best.index) * 2 + 1);
}

Remoteness remoteness_wythoff(const WyPosition& pos, const WythoffParams& p) {
  WythoffTable table(p);
  return remoteness_wythoff(pos, table);
}

std::optional<WyPosition> optimal_move_wythoff(const WyPosition& pos, WythoffTable& table) {
  WyClass c = classify_wythoff(pos, table);
  if (c.outcome == Outcome::P) {
    if (*c.index == 0) return std::nullopt;
    // lower the larger pile by one; a diagonal move then reaches index m-1
    if (pos.x <= pos.y) return WyPosition{pos.x, pos.y - 1};
    return WyPosition{pos.x - 1, pos.y};
  }
  return best_candidate(candidate_p_targets(pos, table)).target;
}

OracleRules::OracleRules(WythoffParams params, std::uint64_t max_coord) : params_(params), max_(max_coord) {
  validate(params_);
  if (max_coord > 0xFFFF) throw CapacityError("WYT oracle supports coordinates up to 65535");
}

void OracleRules::successors(const Position& p, std::vector<Position>& out) const {
  const WyPosition from{p.first, p.second};
  for (std::uint64_t nx = 0; nx <= p.first; ++nx) {
    for (std::uint64_t ny = 0; ny <= p.second; ++ny) {
      if (is_legal_move(from, {nx, ny}, params_)) out.emplace_back(nx, ny);
    }
  }
}

std::vector<OracleRules::Position> OracleRules::successors(const Position& p) const {
  std::vector<Position> out;
  successors(p, out);
  return out;
}

std::size_t OracleRules::index_bound() const { return static_cast<std::size_t>((max_ + 1) * (max_ + 1)); }

std::size_t OracleRules::index_of(const Position& p) const {
  if (p.first > max_ || p.second > max_) throw CapacityError("WYT oracle coordinate exceeds its bound");
  return static_cast<std::size_t>(p.first * (max_ + 1) + p.second);
}

}  // namespace impartial::wythoff
