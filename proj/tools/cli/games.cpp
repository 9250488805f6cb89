#include "games.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "impartial/compound.hpp"
#include "impartial/engine.hpp"
#include "impartial/errors.hpp"
#include "impartial/euclid.hpp"
#include "impartial/hypergraph.hpp"
#include "impartial/moore.hpp"
#include "impartial/wythoff.hpp"

namespace impartial::cli {

namespace {

constexpr std::uint64_t kSmallLimit = 0xFFFF;

Integer integer_value(const Json& v, const std::string& what) {
  if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
  if (v.is_string()) return parse_nonnegative(v.get<std::string>());
  if (v.is_number_integer()) throw ParseError("\"" + what + "\" must be non-negative");
  throw ParseError("\"" + what + "\" must be an integer or a decimal string");
}

std::uint64_t u64_value(const Json& v, const std::string& what) {
  Integer value = integer_value(v, what);
  if (!fits_u64(value)) throw ParseError("\"" + what + "\" does not fit in 64 bits");
  return static_cast<std::uint64_t>(value);
}

std::uint64_t u64_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  return u64_value(doc[key], key);
}

const Json& array_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array");
  }
  return doc[key];
}

void check_dense(std::size_t bound, std::size_t max_nodes) {
  if (bound > max_nodes) {
    throw CapacityError("oracle index space of " + std::to_string(bound) + " positions exceeds the node budget of " +
                        std::to_string(max_nodes));
  }
}

SmallPiles small_piles(const std::vector<Integer>& piles) {
  if (piles.size() > SmallPiles::kCapacity) throw CapacityError("the oracle handles at most 8 piles");
  SmallPiles out(piles.size());
  for (std::size_t i = 0; i < piles.size(); ++i) {
    if (piles[i] > kSmallLimit) throw CapacityError("the oracle handles piles up to 65535");
    out[i] = static_cast<SmallPiles::value_type>(piles[i]);
  }
  return out;
}

Json piles_json(const auto& piles) {
  Json arr = Json::array();
  for (const auto& v : piles) arr.push_back(json_integer(Integer(v)));
  return arr;
}

// --- Euclid ---------------------------------------------------------------

class EuclidGame final : public Game {
 public:
  EuclidGame(euclid::EuclidPosition p, std::size_t max_nodes) : Game(max_nodes), p_(std::move(p)) {
    euclid::validate(p_);
  }

  static Json at(const Integer& x, const Integer& y) {
    Json j;
    j["game"] = "euclid";
    j["x"] = json_integer(x);
    j["y"] = json_integer(y);
    return j;
  }

  Json position() const override { return at(p_.x, p_.y); }
  Remoteness remoteness() override { return play().remoteness; }
  std::optional<SgValue> cheap_sg() override { return euclid::sg_euclid(p_); }
  SgValue sg() override { return euclid::sg_euclid(p_); }

  std::optional<Json> optimal_move() override {
    const auto& t = play().trace;
    if (t.size() < 2) return std::nullopt;
    return at(t[1].x, t[1].y);
  }

  std::optional<Json> trace() override {
    Json arr = Json::array();
    for (const auto& q : play().trace) arr.push_back(Json::array({json_integer(q.x), json_integer(q.y)}));
    return arr;
  }

  ExplicitGame explicit_graph() const override {
    if (p_.x > kSmallLimit || p_.y > kSmallLimit) {
      throw CapacityError("explicit Euclid graphs need coordinates up to 65535");
    }
    auto x = static_cast<std::uint64_t>(p_.x);
    auto y = static_cast<std::uint64_t>(p_.y);
    euclid::OracleRules rules(std::max(x, y));
    return materialize(rules, {x, y}, max_nodes_,
                       [](const euclid::OracleRules::Position& q) { return at(q.first, q.second).dump(); });
  }

 private:
  const euclid::EuclidPlay& play() {
    if (!play_) play_ = euclid::euclid_play(p_);
    return *play_;
  }

  euclid::EuclidPosition p_;
  std::optional<euclid::EuclidPlay> play_;
};

// --- Moore ----------------------------------------------------------------

class MooreGame final : public Game {
 public:
  MooreGame(moore::MoorePosition p, std::size_t max_nodes) : Game(max_nodes), p_(std::move(p)) {
    moore::validate(p_);
  }

  static Json at(std::size_t k, const auto& piles) {
    Json j;
    j["game"] = "moore";
    j["k"] = k;
    j["piles"] = piles_json(piles);
    return j;
  }

  Json position() const override { return at(p_.k, p_.piles); }
  Remoteness remoteness() override { return moore::remoteness(p_); }

  SgValue sg() override {
    SmallPiles start = small_piles(p_.piles);
    moore::OracleRules rules(p_.n(), p_.k, *std::max_element(start.begin(), start.end()));
    check_dense(rules.index_bound(), max_nodes_);
    Solver<moore::OracleRules> solver(rules, SolverLimits{max_nodes_});
    return solver.sg(start);
  }

  std::optional<Json> optimal_move() override {
    auto m = moore::optimal_move(p_);
    if (!m) return std::nullopt;
    return at(p_.k, *m);
  }

  ExplicitGame explicit_graph() const override {
    SmallPiles start = small_piles(p_.piles);
    moore::OracleRules rules(p_.n(), p_.k, *std::max_element(start.begin(), start.end()));
    const std::size_t k = p_.k;
    return materialize(rules, start, max_nodes_, [k](const SmallPiles& q) { return at(k, q).dump(); });
  }

 private:
  moore::MoorePosition p_;
};

// --- Wythoff --------------------------------------------------------------

class WythoffGame final : public Game {
 public:
  WythoffGame(wythoff::WythoffParams params, wythoff::WyPosition pos, std::size_t max_nodes)
      : Game(max_nodes), params_(params), pos_(pos), table_(params) {}

  static Json at(const wythoff::WythoffParams& p, std::uint64_t x, std::uint64_t y) {
    Json j;
    j["game"] = "wythoff";
    j["a"] = p.a;
    j["b"] = p.b;
    j["x"] = json_integer(x);
    j["y"] = json_integer(y);
    return j;
  }

  Json position() const override { return at(params_, pos_.x, pos_.y); }
  Remoteness remoteness() override { return wythoff::remoteness_wythoff(pos_, table_); }

  SgValue sg() override {
    wythoff::OracleRules rules(params_, std::max(pos_.x, pos_.y));
    check_dense(rules.index_bound(), max_nodes_);
    Solver<wythoff::OracleRules> solver(rules, SolverLimits{max_nodes_});
    return solver.sg({pos_.x, pos_.y});
  }

  std::optional<Json> optimal_move() override {
    auto m = wythoff::optimal_move_wythoff(pos_, table_);
    if (!m) return std::nullopt;
    return at(params_, m->x, m->y);
  }

  ExplicitGame explicit_graph() const override {
    wythoff::OracleRules rules(params_, std::max(pos_.x, pos_.y));
    auto params = params_;
    return materialize(rules, {pos_.x, pos_.y}, max_nodes_, [params](const wythoff::OracleRules::Position& q) {
      return at(params, q.first, q.second).dump();
    });
  }

 private:
  wythoff::WythoffParams params_;
  wythoff::WyPosition pos_;
  wythoff::WythoffTable table_;
};

// --- Hypergraph NIM -------------------------------------------------------

class HypergraphGame final : public Game {
 public:
  HypergraphGame(hypergraph::Hypergraph h, hypergraph::Piles x, std::size_t max_nodes)
      : Game(max_nodes), h_(std::move(h)), x_(std::move(x)) {
    if (x_.size() != h_.n()) {
      throw ArgumentError("expected " + std::to_string(h_.n()) + " piles, got " + std::to_string(x_.size()));
    }
  }

  static Json at(const auto& piles) {
    Json j;
    j["game"] = "hypergraph";
    j["piles"] = piles_json(piles);
    return j;
  }

  Json position() const override { return at(x_); }

  Remoteness remoteness() override {
    if (mtf()) return hypergraph::remoteness_mtf(x_, h_);
    return solver().remoteness(start());
  }

  SgValue sg() override { return solver().sg(start()); }

  std::optional<Json> optimal_move() override {
    if (mtf()) {
      auto y = hypergraph::optimal_move_mtf(x_, h_);
      if (y.empty()) return std::nullopt;
      return at(y);
    }
    auto y = solver().optimal_move(start());
    if (!y) return std::nullopt;
    return at(*y);
  }

  ExplicitGame explicit_graph() const override {
    return materialize(hypergraph::OracleRules(h_), start(), max_nodes_,
                       [](const SmallPiles& q) { return at(q).dump(); });
  }

 private:
  bool mtf() {
    if (!mtf_) mtf_ = hypergraph::is_mtf(h_);
    return *mtf_;
  }

  SmallPiles start() const {
    std::vector<Integer> piles(x_.begin(), x_.end());
    return small_piles(piles);
  }

  Solver<hypergraph::OracleRules>& solver() {
    if (!solver_) {
      if (h_.n() > SmallPiles::kCapacity) throw CapacityError("the oracle handles at most 8 piles");
      solver_.emplace(hypergraph::OracleRules(h_), SolverLimits{max_nodes_});
    }
    return *solver_;
  }

  hypergraph::Hypergraph h_;
  hypergraph::Piles x_;
  std::optional<bool> mtf_;
  std::optional<Solver<hypergraph::OracleRules>> solver_;
};

// --- Explicit graph -------------------------------------------------------

class GraphGame final : public Game {
 public:
  GraphGame(ExplicitGame g, std::size_t max_nodes) : Game(max_nodes), g_(std::move(g)) {
    if (g_.size() > max_nodes_) {
      throw CapacityError("graph has " + std::to_string(g_.size()) + " nodes, over the node budget of " +
                          std::to_string(max_nodes_));
    }
    solver_.emplace(g_, SolverLimits{max_nodes_});
  }

  Json at(std::size_t node) const {
    Json j;
    j["game"] = "graph";
    j["start"] = g_.id(node);
    return j;
  }

  Json position() const override { return at(g_.start()); }
  Remoteness remoteness() override { return solver_->remoteness(g_.start()); }
  std::optional<SgValue> cheap_sg() override { return sg(); }
  SgValue sg() override { return solver_->sg(g_.start()); }

  std::optional<Json> optimal_move() override {
    auto m = solver_->optimal_move(g_.start());
    if (!m) return std::nullopt;
    return at(*m);
  }

  ExplicitGame explicit_graph() const override {
    ExplicitGame out;
    for (std::size_t v = 0; v < g_.size(); ++v) out.add_node(at(v).dump());
    for (std::size_t v = 0; v < g_.size(); ++v) {
      for (std::size_t w : g_.successors(v)) out.add_edge(v, w);
    }
    out.set_start(g_.start());
    return out;
  }

 private:
  ExplicitGame g_;
  std::optional<Solver<ExplicitGame>> solver_;
};

// --- One-pile NIM ---------------------------------------------------------

class NimGame final : public Game {
 public:
  NimGame(std::uint64_t pile, std::size_t max_nodes) : Game(max_nodes), pile_(pile) {}

  static Json at(std::uint64_t pile) {
    Json j;
    j["game"] = "nim";
    j["pile"] = json_integer(pile);
    return j;
  }

  Json position() const override { return at(pile_); }
  Remoteness remoteness() override { return Remoteness(std::uint64_t{pile_ == 0 ? 0u : 1u}); }
  std::optional<SgValue> cheap_sg() override { return sg(); }
  SgValue sg() override { return SgValue(pile_); }

  std::optional<Json> optimal_move() override {
    if (pile_ == 0) return std::nullopt;
    return at(0);
  }

  ExplicitGame explicit_graph() const override {
    return materialize(OnePileNim{}, pile_, max_nodes_, [](std::uint64_t s) { return at(s).dump(); });
  }

 private:
  std::uint64_t pile_;
};

// Inline object under inline_key, or the text of "file".
std::string source_text(const Json& doc, const char* inline_key, const std::filesystem::path& base_dir) {
  if (doc.contains(inline_key)) return doc[inline_key].dump();
  if (doc.contains("file") && doc["file"].is_string()) {
    std::filesystem::path path(doc["file"].get<std::string>());
    if (path.is_relative()) path = base_dir / path;
    return read_file(path);
  }
  throw ParseError(std::string("expected \"") + inline_key + "\" or \"file\"");
}

}  // namespace

Json json_integer(const Integer& value) {
  static const Integer limit = Integer(1) << 53;
  if (value >= 0 && value < limit) return Json(static_cast<std::uint64_t>(value));
  if (value < 0 && -value < limit) return Json(static_cast<std::int64_t>(value));
  return Json(to_string(value));
}

Integer integer_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  return integer_value(doc[key], key);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::unique_ptr<Game> game_from_json(const Json& doc, const std::filesystem::path& base_dir,
                                     std::size_t max_nodes) {
  if (!doc.is_object() || !doc.contains("game") || !doc["game"].is_string()) {
    throw ParseError("position must be an object with a \"game\" string");
  }
  const std::string game = doc["game"].get<std::string>();

  if (game == "euclid") {
    return std::make_unique<EuclidGame>(euclid::EuclidPosition{integer_field(doc, "x"), integer_field(doc, "y")},
                                        max_nodes);
  }
  if (game == "moore") {
    moore::MoorePosition p;
    p.k = u64_field(doc, "k");
    for (const auto& v : array_field(doc, "piles")) p.piles.push_back(integer_value(v, "piles"));
    return std::make_unique<MooreGame>(std::move(p), max_nodes);
  }
  if (game == "wythoff") {
    wythoff::WythoffParams params;
    if (doc.contains("a")) params.a = u64_field(doc, "a");
    if (doc.contains("b")) params.b = u64_field(doc, "b");
    wythoff::validate(params);
    return std::make_unique<WythoffGame>(params, wythoff::WyPosition{u64_field(doc, "x"), u64_field(doc, "y")},
                                         max_nodes);
  }
  if (game == "hypergraph") {
    hypergraph::Hypergraph h = hypergraph::parse_hypergraph(source_text(doc, "hypergraph", base_dir));
    hypergraph::Piles x;
    for (const auto& v : array_field(doc, "piles")) x.push_back(u64_value(v, "piles"));
    return std::make_unique<HypergraphGame>(std::move(h), std::move(x), max_nodes);
  }
  if (game == "graph") {
    ExplicitGame g = parse_explicit_game(source_text(doc, "graph", base_dir));
    if (doc.contains("start")) {
      const Json& s = doc["start"];
      std::string id = s.is_string() ? s.get<std::string>() : s.dump();
      auto node = g.find(id);
      if (!node) throw ParseError("unknown start node \"" + id + "\"");
      g.set_start(*node);
    }
    return std::make_unique<GraphGame>(std::move(g), max_nodes);
  }
  if (game == "nim") return std::make_unique<NimGame>(u64_field(doc, "pile"), max_nodes);
  throw ParseError("unknown game \"" + game + "\"");
}

Json query_result(Game& game, bool with_sg) {
  Json pos = game.position();
  Remoteness r = game.remoteness();
  std::optional<SgValue> sg = with_sg ? std::optional<SgValue>(game.sg()) : game.cheap_sg();

  Json out;
  out["game"] = pos["game"];
  out["position"] = pos;
  out["remoteness"] = json_integer(r.value);
  out["class"] = to_string(r.outcome());
  if (sg) out["sg"] = json_integer(sg->value);
  if (auto m = game.optimal_move()) out["optimal_move"] = *m;
  if (auto t = game.trace()) out["trace"] = *t;
  return out;
}

}  // namespace impartial::cli
