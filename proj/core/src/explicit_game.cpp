#include "impartial/explicit_game.hpp"

#include <json.hpp>

namespace impartial {

using json = nlohmann::ordered_json;

std::size_t ExplicitGame::add_node(std::string id) {
  if (index_.count(id) != 0) throw ArgumentError("duplicate node id '" + id + "'");
  std::size_t i = ids_.size();
  index_.emplace(id, i);
  ids_.push_back(std::move(id));
  adjacency_.emplace_back();
  return i;
}

void ExplicitGame::add_edge(std::size_t from, std::size_t to) {
  if (from >= ids_.size() || to >= ids_.size()) throw ArgumentError("edge endpoint out of range");
  adjacency_[from].push_back(to);
}

void ExplicitGame::add_edge(std::string_view from, std::string_view to) {
  auto f = find(from);
  auto t = find(to);
  if (!f) throw ArgumentError("unknown node id '" + std::string(from) + "'");
  if (!t) throw ArgumentError("unknown node id '" + std::string(to) + "'");
  add_edge(*f, *t);
}

std::size_t ExplicitGame::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return total;
}

std::optional<ExplicitGame::Position> ExplicitGame::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ExplicitGame::set_start(Position p) {
  if (p >= ids_.size()) throw ArgumentError("start node out of range");
  start_ = p;
}

namespace {

std::string id_of(const json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw ParseError(std::string(what) + " must be a string or integer id");
}

}  // namespace

ExplicitGame parse_explicit_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw ParseError("graph JSON needs a \"nodes\" array");
  }
  ExplicitGame game;
  try {
    for (const auto& node : doc["nodes"]) game.add_node(id_of(node, "node"));
    if (doc.contains("edges")) {
      if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
      for (const auto& edge : doc["edges"]) {
        if (!edge.is_array() || edge.size() != 2) throw ParseError("each edge must be [from, to]");
        game.add_edge(id_of(edge[0], "edge endpoint"), id_of(edge[1], "edge endpoint"));
      }
    }
    if (!doc.contains("start")) throw ParseError("graph JSON needs a \"start\" node");
    std::string start = id_of(doc["start"], "start");
    auto s = game.find(start);
    if (!s) throw ParseError("start node '" + start + "' is not declared");
    game.set_start(*s);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  return game;
}

std::string to_json(const ExplicitGame& game) {
  json doc;
  doc["nodes"] = json::array();
  doc["edges"] = json::array();
  for (std::size_t i = 0; i < game.size(); ++i) doc["nodes"].push_back(game.id(i));
  for (std::size_t i = 0; i < game.size(); ++i) {
    for (std::size_t j : game.successors(i)) doc["edges"].push_back({game.id(i), game.id(j)});
  }
  doc["start"] = game.size() ? game.id(game.start()) : std::string();
  return doc.dump();
}

}  // namespace impartial
