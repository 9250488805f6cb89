#include <map>

#include <json.hpp>

#include "impartial/errors.hpp"
#include "impartial/moore.hpp"

namespace impartial::moore {

using json = nlohmann::ordered_json;

void validate(const VcInstance& instance) {
  if (instance.cover_size < 1) throw ArgumentError("cover size c must be at least 1");
  for (const auto& [u, v] : instance.edges) {
    if (u >= instance.vertices.size() || v >= instance.vertices.size()) {
      throw ArgumentError("edge references an undeclared vertex");
    }
    if (u == v) throw ArgumentError("self-loop on vertex '" + instance.vertices[u] + "'");
  }
}

VcInstance parse_vc_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("graph JSON needs a \"vertices\" array");
  }
  auto id_of = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw ParseError("vertex ids must be strings or integers");
  };
  VcInstance inst;
  std::map<std::string, std::size_t> index;
  for (const auto& v : doc["vertices"]) {
    std::string id = id_of(v);
    if (!index.emplace(id, inst.vertices.size()).second) throw ParseError("duplicate vertex '" + id + "'");
    inst.vertices.push_back(id);
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be [u, v]");
      auto u = index.find(id_of(e[0]));
      auto v = index.find(id_of(e[1]));
      if (u == index.end() || v == index.end()) throw ParseError("edge references an undeclared vertex");
      inst.edges.emplace_back(u->second, v->second);
    }
  }
  if (doc.contains("c")) {
    if (!doc["c"].is_number_integer() || doc["c"].get<long long>() < 1) {
      throw ParseError("\"c\" must be a positive integer");
    }
    inst.cover_size = doc["c"].get<std::size_t>();
  }
  try {
    validate(inst);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

VcReduction reduce_vertex_cover(const VcInstance& instance) {
  validate(instance);
  const std::size_t c = instance.cover_size;
  VcReduction out;
  out.position.k = c;
  for (std::size_t v = 0; v < instance.vertices.size(); ++v) {
    Integer row = 0;
    for (std::size_t e = 0; e < instance.edges.size(); ++e) {
      const auto& [a, b] = instance.edges[e];
      if (a == v || b == v) boost::multiprecision::bit_set(row, static_cast<unsigned>(e));
    }
    out.position.piles.push_back(row);
    out.row_labels.push_back("v:" + instance.vertices[v]);
  }
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    for (std::size_t i = 0; i < c; ++i) {
      out.position.piles.push_back(Integer(1) << e);
      out.row_labels.push_back("slack:" + std::to_string(e) + ":" + std::to_string(i));
    }
  }
  return out;
}

}  // namespace impartial::moore
