#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "impartial/engine.hpp"
#include "impartial/errors.hpp"

namespace impartial {

/// A game given as an explicit digraph with string node ids. Successors are
/// listed in edge insertion order.
class ExplicitGame {
 public:
  using Position = std::size_t;

  /// Adds a node and returns its index. Duplicate ids are rejected.
  std::size_t add_node(std::string id);
  void add_edge(std::size_t from, std::size_t to);
  void add_edge(std::string_view from, std::string_view to);

  const std::vector<std::size_t>& successors(Position p) const { return adjacency_.at(p); }
  bool is_terminal(Position p) const { return adjacency_.at(p).empty(); }

  std::size_t index_bound() const { return ids_.size(); }
  std::size_t index_of(Position p) const { return p; }

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const;
  const std::string& id(Position p) const { return ids_.at(p); }
  std::optional<Position> find(std::string_view id) const;

  Position start() const { return start_; }
  void set_start(Position p);

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<std::string, std::size_t> index_;
  Position start_ = 0;
};

/// Parses {"nodes":[id,...], "edges":[[from,to],...], "start":id}.
/// Throws ParseError on malformed documents or dangling ids.
ExplicitGame parse_explicit_game(std::string_view json);

/// Inverse of parse_explicit_game; key order and edge order are stable.
std::string to_json(const ExplicitGame& game);

/// Enumerates the positions reachable from start (breadth-first, successor
/// order) and returns them as an explicit graph rooted at node 0. Node ids
/// come from label, or are the discovery indices when label is empty.
template <GameRules R>
ExplicitGame materialize(const R& rules, const typename R::Position& start,
                         std::size_t max_nodes = static_cast<std::size_t>(-1),
                         std::function<std::string(const typename R::Position&)> label = {}) {
  using Position = typename R::Position;
  std::unordered_map<Position, std::size_t, PositionHash<R>> index;
  std::vector<Position> order;
  auto intern = [&](const Position& p) {
    auto [it, inserted] = index.try_emplace(p, order.size());
    if (inserted) {
      if (order.size() >= max_nodes) {
        throw CapacityError("game graph exceeds the node budget of " + std::to_string(max_nodes) +
                            " positions");
      }
      order.push_back(p);
    }
    return it->second;
  };
  intern(start);
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<Position> succ;
  for (std::size_t i = 0; i < order.size(); ++i) {
    collect_successors(rules, Position(order[i]), succ);
    std::vector<std::size_t> row;
    row.reserve(succ.size());
    for (const auto& s : succ) row.push_back(intern(s));
    adjacency.push_back(std::move(row));
  }
  ExplicitGame game;
  for (std::size_t i = 0; i < order.size(); ++i) {
    game.add_node(label ? label(order[i]) : std::to_string(i));
  }
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (std::size_t j : adjacency[i]) game.add_edge(i, j);
  }
  game.set_start(0);
  return game;
}

}  // namespace impartial
