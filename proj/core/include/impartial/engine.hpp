#pragma once

// Generic evaluation of Smith remoteness and Sprague-Grundy values over any
// finite acyclic game graph. Every specialized solver in this library is
// checked against this engine.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "impartial/errors.hpp"
#include "impartial/hash.hpp"
#include "impartial/values.hpp"

namespace impartial {

/// A game is a successor generator over hashable positions. Successors are
/// returned in the adapter's documented order; optimal_move tie-breaks on it.
template <class R>
concept GameRules = requires(const R& rules, const typename R::Position& p) {
  typename R::Position;
  { rules.successors(p) } -> std::convertible_to<std::vector<typename R::Position>>;
};

// Optional: fill a caller-owned buffer instead of returning a fresh vector.
template <class R>
concept BufferedSuccessors =
    GameRules<R> && requires(const R& rules, const typename R::Position& p,
                             std::vector<typename R::Position>& out) {
      rules.successors(p, out);
    };

// Optional: positions map into [0, index_bound()), so memo tables can be flat.
template <class R>
concept DenseIndexed = GameRules<R> && requires(const R& rules, const typename R::Position& p) {
  { rules.index_bound() } -> std::convertible_to<std::size_t>;
  { rules.index_of(p) } -> std::convertible_to<std::size_t>;
};

template <class R>
concept HasTerminalTest = GameRules<R> && requires(const R& rules, const typename R::Position& p) {
  { rules.is_terminal(p) } -> std::convertible_to<bool>;
};

namespace detail {
template <class R>
struct PositionHashOf {
  using type = Hash<typename R::Position>;
};
template <class R>
  requires requires { typename R::Hash; }
struct PositionHashOf<R> {
  using type = typename R::Hash;
};
}  // namespace detail

template <GameRules R>
using PositionHash = typename detail::PositionHashOf<R>::type;

template <GameRules R>
bool is_terminal(const R& rules, const typename R::Position& p) {
  if constexpr (HasTerminalTest<R>) {
    return rules.is_terminal(p);
  } else {
    return std::vector<typename R::Position>(rules.successors(p)).empty();
  }
}

template <GameRules R>
void collect_successors(const R& rules, const typename R::Position& p,
                        std::vector<typename R::Position>& out) {
  if constexpr (BufferedSuccessors<R>) {
    out.clear();
    rules.successors(p, out);
  } else {
    out = rules.successors(p);
  }
}

struct SolverLimits {
  std::size_t max_nodes = std::numeric_limits<std::size_t>::max();
};

/// Values memoized per evaluated position.
struct NodeValue {
  std::uint64_t remoteness = 0;
  std::uint64_t sg = 0;
};

/// Memoizing solver bound to one rules object. Evaluation is an iterative
/// depth-first traversal, so arbitrarily long chains do not exhaust the call
/// stack; a position met again while still on the stack raises CycleError.
///
/// A Solver is not synchronized. Share nothing between threads, or use one
/// Solver per thread; the free functions below build a fresh one per call.
/// After a CycleError or CapacityError the memo is partial; discard the Solver.
template <GameRules R>
class Solver {
 public:
  using Position = typename R::Position;

  explicit Solver(R rules, SolverLimits limits = {})
      : rules_(std::move(rules)), limits_(limits) {
    if constexpr (DenseIndexed<R>) {
      std::size_t bound = rules_.index_bound();
      state_.assign(bound, kUnvisited);
      values_.resize(bound);
    }
  }

  const R& rules() const { return rules_; }
  std::size_t node_count() const { return node_count_; }

  const NodeValue& evaluate(const Position& start) {
    if (const NodeValue* done = find_done(start)) return *done;
    depth_ = 0;
    push(start);
    while (depth_ > 0) {
      std::size_t top = depth_ - 1;
      bool descended = false;
      while (frames_[top].next < frames_[top].successors.size()) {
        const Position& s = frames_[top].successors[frames_[top].next];
        std::uint8_t st = state_of(s);
        if (st == kDone) {
          ++frames_[top].next;
          continue;
        }
        if (st == kInProgress) throw CycleError();
        Position copy = s;
        push(copy);
        descended = true;
        break;
      }
      if (descended) continue;
      finalize(frames_[top]);
      --depth_;
    }
    return *find_done(start);
  }

  Remoteness remoteness(const Position& p) { return Remoteness(evaluate(p).remoteness); }
  SgValue sg(const Position& p) { return SgValue(evaluate(p).sg); }
  Outcome classify(const Position& p) {
    return evaluate(p).remoteness % 2 == 0 ? Outcome::P : Outcome::N;
  }

  /// First successor (in enumeration order) whose remoteness is one less.
  std::optional<Position> optimal_move(const Position& p) {
    std::uint64_t r = evaluate(p).remoteness;
    if (r == 0) return std::nullopt;
    std::vector<Position> succ;
    collect_successors(rules_, p, succ);
    for (const auto& s : succ) {
      if (evaluate(s).remoteness + 1 == r) return s;
    }
    return std::nullopt;  // unreachable for a consistent memo
  }

  /// True iff every move reachable from start strictly decreases SG.
  bool is_sg_decreasing(const Position& start) {
    evaluate(start);
    std::unordered_set<Position, PositionHash<R>> seen{start};
    std::deque<Position> queue{start};
    std::vector<Position> succ;
    while (!queue.empty()) {
      Position p = std::move(queue.front());
      queue.pop_front();
      std::uint64_t g = find_done(p)->sg;
      collect_successors(rules_, p, succ);
      for (const auto& s : succ) {
        if (find_done(s)->sg >= g) return false;
        if (seen.insert(s).second) queue.push_back(s);
      }
    }
    return true;
  }

 private:
  static constexpr std::uint8_t kUnvisited = 0;
  static constexpr std::uint8_t kInProgress = 1;
  static constexpr std::uint8_t kDone = 2;

  struct Frame {
    Position position{};
    std::vector<Position> successors;
    std::size_t next = 0;
  };

  struct Entry {
    std::uint8_t state = kUnvisited;
    NodeValue value;
  };

  std::uint8_t state_of(const Position& p) const {
    if constexpr (DenseIndexed<R>) {
      return state_[rules_.index_of(p)];
    } else {
      auto it = memo_.find(p);
      return it == memo_.end() ? kUnvisited : it->second.state;
    }
  }

  const NodeValue* find_done(const Position& p) const {
    if constexpr (DenseIndexed<R>) {
      std::size_t i = rules_.index_of(p);
      return state_[i] == kDone ? &values_[i] : nullptr;
    } else {
      auto it = memo_.find(p);
      return it != memo_.end() && it->second.state == kDone ? &it->second.value : nullptr;
    }
  }

  void mark(const Position& p, std::uint8_t st, NodeValue v = {}) {
    if constexpr (DenseIndexed<R>) {
      std::size_t i = rules_.index_of(p);
      state_[i] = st;
      values_[i] = v;
    } else {
      memo_[p] = Entry{st, v};
    }
  }

  void push(const Position& p) {
    if (++node_count_ > limits_.max_nodes) {
      throw CapacityError("game graph exceeds the node budget of " +
                          std::to_string(limits_.max_nodes) + " positions");
    }
    mark(p, kInProgress);
    if (frames_.size() <= depth_) frames_.emplace_back();
    Frame& f = frames_[depth_++];
    f.position = p;
    f.next = 0;
    collect_successors(rules_, p, f.successors);
  }

  // R(x) = 0 at terminals; 1 + min even R(y) if a P-successor exists;
  // otherwise 1 + max R(y). SG is the mex of successor values.
  void finalize(Frame& f) {
    NodeValue v;
    if (!f.successors.empty()) {
      constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
      std::uint64_t min_even = kNone;
      std::uint64_t max_any = 0;
      seen_sg_.assign(f.successors.size() + 1, false);
      for (const auto& s : f.successors) {
        const NodeValue& sv = *find_done(s);
        if (sv.remoteness % 2 == 0 && sv.remoteness < min_even) min_even = sv.remoteness;
        if (sv.remoteness > max_any) max_any = sv.remoteness;
        if (sv.sg < seen_sg_.size()) seen_sg_[sv.sg] = true;
      }
      v.remoteness = 1 + (min_even != kNone ? min_even : max_any);
      while (seen_sg_[v.sg]) ++v.sg;
    }
    mark(f.position, kDone, v);
  }

  R rules_;
  SolverLimits limits_;
  std::size_t node_count_ = 0;
  std::vector<Frame> frames_;
  std::size_t depth_ = 0;
  std::vector<bool> seen_sg_;
  std::unordered_map<Position, Entry, PositionHash<R>> memo_;
  std::vector<std::uint8_t> state_;
  std::vector<NodeValue> values_;
};

/// Least non-negative integer not in values.
template <class Range>
std::uint64_t mex(const Range& values) {
  std::vector<std::uint64_t> v(std::begin(values), std::end(values));
  std::vector<bool> present(v.size() + 1, false);
  for (auto u : v) {
    if (u < present.size()) present[u] = true;
  }
  std::uint64_t m = 0;
  while (present[m]) ++m;
  return m;
}

inline std::uint64_t mex(std::initializer_list<std::uint64_t> values) {
  return mex(std::vector<std::uint64_t>(values));
}

template <GameRules R>
Remoteness smith_remoteness(const R& rules, const typename R::Position& p, SolverLimits limits = {}) {
  return Solver<R>(rules, limits).remoteness(p);
}

template <GameRules R>
SgValue sg_value(const R& rules, const typename R::Position& p, SolverLimits limits = {}) {
  return Solver<R>(rules, limits).sg(p);
}

template <GameRules R>
Outcome classify(const R& rules, const typename R::Position& p, SolverLimits limits = {}) {
  return Solver<R>(rules, limits).classify(p);
}

template <GameRules R>
std::optional<typename R::Position> optimal_move(const R& rules, const typename R::Position& p,
                                                 SolverLimits limits = {}) {
  return Solver<R>(rules, limits).optimal_move(p);
}

template <GameRules R>
bool is_sg_decreasing(const R& rules, const typename R::Position& start, SolverLimits limits = {}) {
  return Solver<R>(rules, limits).is_sg_decreasing(start);
}

}  // namespace impartial
