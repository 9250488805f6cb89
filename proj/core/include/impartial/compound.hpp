#pragma once

// Sums of games. The value formulas (NIM-sum of SG values for disjunctive
// compounds, minimum of remoteness values for conjunctive compounds) are the
// production path; the explicit product games exist so those formulas can be
// checked against brute force.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "impartial/engine.hpp"
#include "impartial/errors.hpp"
#include "impartial/values.hpp"

namespace impartial {

/// NIM-sum (XOR fold) of component SG values; the empty sum is 0.
SgValue disjunctive_sg(std::span<const SgValue> values);

/// Smith's rule for conjunctive compounds: the minimum component remoteness.
/// Throws ArgumentError on an empty list.
Remoteness conjunctive_remoteness(std::span<const Remoteness> values);

/// One-pile NIM: from s one may move to any of 0, 1, ..., s-1 (in that order).
struct OnePileNim {
  using Position = std::uint64_t;

  std::vector<Position> successors(Position s) const {
    std::vector<Position> out;
    out.reserve(s);
    for (Position t = 0; t < s; ++t) out.push_back(t);
    return out;
  }
  bool is_terminal(Position s) const { return s == 0; }
};

/// Move in exactly one component. Successors are ordered by component, then
/// by that component's own successor order.
template <GameRules R>
class DisjunctiveProduct {
 public:
  using Position = std::vector<typename R::Position>;

  explicit DisjunctiveProduct(std::vector<R> components) : components_(std::move(components)) {}

  const std::vector<R>& components() const { return components_; }

  std::vector<Position> successors(const Position& p) const {
    std::vector<Position> out;
    std::vector<typename R::Position> local;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      collect_successors(components_[i], p[i], local);
      for (const auto& s : local) {
        Position next = p;
        next[i] = s;
        out.push_back(std::move(next));
      }
    }
    return out;
  }

 private:
  std::vector<R> components_;
};

/// Move in every component simultaneously; terminal as soon as any component
/// is terminal. Successors are the cartesian product of component successor
/// lists, last component varying fastest.
template <GameRules R>
class ConjunctiveProduct {
 public:
  using Position = std::vector<typename R::Position>;

  explicit ConjunctiveProduct(std::vector<R> components) : components_(std::move(components)) {}

  const std::vector<R>& components() const { return components_; }

  std::vector<Position> successors(const Position& p) const {
    std::vector<std::vector<typename R::Position>> lists(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
      collect_successors(components_[i], p[i], lists[i]);
      if (lists[i].empty()) return {};
    }
    std::vector<Position> out;
    if (components_.empty()) return out;
    std::vector<std::size_t> digit(components_.size(), 0);
    while (true) {
      Position next(components_.size());
      for (std::size_t i = 0; i < components_.size(); ++i) next[i] = lists[i][digit[i]];
      out.push_back(std::move(next));
      std::size_t i = components_.size();
      while (i > 0) {
        --i;
        if (++digit[i] < lists[i].size()) break;
        digit[i] = 0;
        if (i == 0) return out;
      }
    }
  }

 private:
  std::vector<R> components_;
};

template <GameRules R>
DisjunctiveProduct<R> disjunctive_product(std::vector<R> components) {
  return DisjunctiveProduct<R>(std::move(components));
}

template <GameRules R>
ConjunctiveProduct<R> conjunctive_product(std::vector<R> components) {
  return ConjunctiveProduct<R>(std::move(components));
}

}  // namespace impartial
