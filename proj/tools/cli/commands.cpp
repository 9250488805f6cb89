#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <new>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "games.hpp"
#include "impartial/compound.hpp"
#include "impartial/engine.hpp"
#include "impartial/errors.hpp"
#include "impartial/euclid.hpp"
#include "impartial/hypergraph.hpp"
#include "impartial/moore.hpp"
#include "impartial/wythoff.hpp"

namespace impartial::cli {

namespace {

struct QueryArgs {
  std::string x;
  std::string y;
  std::size_t k = 1;
  std::vector<std::string> piles;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::string file;
  std::string start;
  std::string text;
};

struct Subcommands {
  CLI::App* euclid = nullptr;
  CLI::App* moore = nullptr;
  CLI::App* wythoff = nullptr;
  CLI::App* hypergraph = nullptr;
  CLI::App* graph = nullptr;
  CLI::App* nim = nullptr;
  CLI::App* json = nullptr;
};

Subcommands add_game_subcommands(CLI::App* cmd, QueryArgs& q) {
  Subcommands s;
  cmd->require_subcommand(1);

  s.euclid = cmd->add_subcommand("euclid", "Game Euclid at (x, y)");
  s.euclid->add_option("x", q.x)->required();
  s.euclid->add_option("y", q.y)->required();

  s.moore = cmd->add_subcommand("moore", "Moore's NIM_{n,k}");
  s.moore->add_option("--k", q.k, "piles a move may decrease")->required();
  s.moore->add_option("--piles", q.piles, "comma-separated pile sizes")->required()->delimiter(',');

  s.wythoff = cmd->add_subcommand("wythoff", "WYT(a,b) at (x, y)");
  s.wythoff->add_option("--a", q.a)->check(CLI::PositiveNumber);
  s.wythoff->add_option("--b", q.b)->check(CLI::PositiveNumber);
  s.wythoff->add_option("x", q.x)->required();
  s.wythoff->add_option("y", q.y)->required();

  s.hypergraph = cmd->add_subcommand("hypergraph", "hypergraph NIM");
  s.hypergraph->add_option("--file", q.file, "hypergraph JSON")->required();
  s.hypergraph->add_option("--piles", q.piles, "comma-separated pile sizes")->required()->delimiter(',');

  s.graph = cmd->add_subcommand("graph", "explicit game graph, solved by the generic engine");
  s.graph->add_option("--file", q.file, "graph JSON")->required();
  s.graph->add_option("--start", q.start, "start node id (defaults to the file's)");

  s.nim = cmd->add_subcommand("nim", "one-pile NIM");
  s.nim->add_option("pile", q.x)->required();

  s.json = cmd->add_subcommand("json", "position given as JSON");
  auto* text = s.json->add_option("position", q.text, "position JSON text");
  auto* file = s.json->add_option("--file", q.file, "file holding position JSON");
  text->excludes(file);
  s.json->require_option(1);
  return s;
}

Json parse_json(const std::string& text, const std::string& what) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(what + " is not valid JSON");
  return doc;
}

Json integer_text(const std::string& text) { return json_integer(parse_nonnegative(text)); }

Json piles_text(const std::vector<std::string>& piles) {
  Json arr = Json::array();
  for (const auto& p : piles) arr.push_back(integer_text(p));
  return arr;
}

std::unique_ptr<Game> game_from_args(const Subcommands& s, const QueryArgs& q, std::size_t budget) {
  Json doc;
  std::filesystem::path base;
  if (s.euclid->parsed()) {
    doc = {{"game", "euclid"}, {"x", integer_text(q.x)}, {"y", integer_text(q.y)}};
  } else if (s.moore->parsed()) {
    doc = {{"game", "moore"}, {"k", q.k}, {"piles", piles_text(q.piles)}};
  } else if (s.wythoff->parsed()) {
    doc = {{"game", "wythoff"}, {"a", q.a}, {"b", q.b}, {"x", integer_text(q.x)}, {"y", integer_text(q.y)}};
  } else if (s.hypergraph->parsed()) {
    doc = {{"game", "hypergraph"}, {"file", q.file}, {"piles", piles_text(q.piles)}};
  } else if (s.graph->parsed()) {
    doc = {{"game", "graph"}, {"file", q.file}};
    if (!q.start.empty()) doc["start"] = q.start;
  } else if (s.nim->parsed()) {
    doc = {{"game", "nim"}, {"pile", integer_text(q.x)}};
  } else {
    if (!q.file.empty()) {
      doc = parse_json(read_file(q.file), q.file);
      base = std::filesystem::path(q.file).parent_path();
    } else {
      doc = parse_json(q.text, "position");
    }
  }
  return game_from_json(doc, base, budget);
}

// --- table ----------------------------------------------------------------

int table_wythoff(std::uint64_t a, std::uint64_t b, std::uint64_t max_m, std::ostream& out) {
  wythoff::WythoffParams params{a, b};
  wythoff::validate(params);
  if (max_m >= wythoff::WythoffTable::kMaxSize) throw CapacityError("--max-m exceeds the table capacity");
  wythoff::WythoffTable table(params);
  table.extend_to_index(max_m);
  out << "m,x_m,y_m\n";
  for (std::uint64_t m = 0; m <= max_m; ++m) out << m << ',' << table.x(m) << ',' << table.y(m) << '\n';
  return kSuccess;
}

int table_euclid(std::uint64_t max, std::ostream& out) {
  out << "x,y,remoteness\n";
  for (std::uint64_t x = 1; x <= max; ++x) {
    for (std::uint64_t y = 1; y <= max; ++y) {
      out << x << ',' << y << ',' << euclid::remoteness_euclid({x, y}).value << '\n';
    }
  }
  return kSuccess;
}

// --- verify ---------------------------------------------------------------

class MismatchLog {
 public:
  MismatchLog(std::string game, std::ostream& out) : game_(std::move(game)), out_(out) {}

  void check(const Json& position, const char* what, const Json& fast, const Json& oracle) {
    ++checks_;
    if (fast == oracle) return;
    ++mismatches_;
    Json line;
    line["game"] = game_;
    line["position"] = position;
    line["check"] = what;
    line["fast"] = fast;
    line["oracle"] = oracle;
    out_ << line.dump() << '\n';
  }

  int finish(std::uint64_t positions) {
    Json summary;
    summary["game"] = game_;
    summary["positions"] = positions;
    summary["checks"] = checks_;
    summary["mismatches"] = mismatches_;
    out_ << summary.dump() << '\n';
    return mismatches_ == 0 ? kSuccess : kMismatch;
  }

 private:
  std::string game_;
  std::ostream& out_;
  std::uint64_t checks_ = 0;
  std::uint64_t mismatches_ = 0;
};

void require_dense(std::size_t bound, std::size_t budget) {
  if (bound > budget) {
    throw CapacityError("sweep covers " + std::to_string(bound) + " positions, over the node budget of " +
                        std::to_string(budget));
  }
}

void for_each_box(std::size_t n, std::size_t max, const std::function<void(const SmallPiles&)>& f) {
  SmallPiles x(n);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == max) x[i++] = 0;
    if (i == n) return;
    ++x[i];
  }
}

Json piles_array(const SmallPiles& x) {
  Json arr = Json::array();
  for (auto v : x) arr.push_back(v);
  return arr;
}

int verify_euclid(std::uint64_t max, std::size_t budget, std::ostream& out) {
  euclid::OracleRules rules(max);
  require_dense(rules.index_bound(), budget);
  Solver<euclid::OracleRules> solver(rules, SolverLimits{budget});
  MismatchLog log("euclid", out);
  for (std::uint64_t x = 1; x <= max; ++x) {
    for (std::uint64_t y = 1; y <= max; ++y) {
      const NodeValue& v = solver.evaluate({x, y});
      Json pos = Json::array({x, y});
      log.check(pos, "remoteness", json_integer(euclid::remoteness_euclid({x, y}).value), v.remoteness);
      log.check(pos, "sg", json_integer(euclid::sg_euclid({x, y}).value), v.sg);
    }
  }
  return log.finish(max * max);
}

int verify_wythoff(std::uint64_t a, std::uint64_t b, std::uint64_t max, std::size_t budget, std::ostream& out) {
  wythoff::WythoffParams params{a, b};
  wythoff::OracleRules rules(params, max);
  require_dense(rules.index_bound(), budget);
  Solver<wythoff::OracleRules> solver(rules, SolverLimits{budget});
  wythoff::WythoffTable table(params);
  MismatchLog log("wythoff", out);
  for (std::uint64_t x = 0; x <= max; ++x) {
    for (std::uint64_t y = 0; y <= max; ++y) {
      const std::uint64_t r = solver.evaluate({x, y}).remoteness;
      Json pos = Json::array({x, y});
      log.check(pos, "remoteness", json_integer(wythoff::remoteness_wythoff({x, y}, table).value), r);
      auto move = wythoff::optimal_move_wythoff({x, y}, table);
      if (r == 0) {
        log.check(pos, "optimal_move", move.has_value(), false);
      } else if (!move || !wythoff::is_legal_move({x, y}, *move, params)) {
        log.check(pos, "optimal_move", move ? Json::array({move->x, move->y}) : Json(), "legal move");
      } else {
        log.check(pos, "optimal_move_remoteness", solver.evaluate({move->x, move->y}).remoteness, r - 1);
      }
    }
  }
  return log.finish((max + 1) * (max + 1));
}

int verify_moore(std::size_t n, std::size_t k, std::size_t max_pile, std::size_t budget, std::ostream& out) {
  moore::OracleRules rules(n, k, max_pile);
  require_dense(rules.index_bound(), budget);
  Solver<moore::OracleRules> solver(rules, SolverLimits{budget});
  MismatchLog log("moore", out);
  for_each_box(n, max_pile, [&](const SmallPiles& x) {
    log.check(piles_array(x), "remoteness", json_integer(moore::remoteness(moore::to_position(x, k)).value),
              solver.evaluate(x).remoteness);
  });
  return log.finish(rules.index_bound());
}

int verify_hypergraph(const std::string& file, std::size_t max_pile, std::size_t budget, std::ostream& out) {
  hypergraph::Hypergraph h = hypergraph::parse_hypergraph(read_file(file));
  if (!hypergraph::is_mtf(h)) throw PreconditionError("hypergraph is not minimally transversal-free");
  if (h.n() > SmallPiles::kCapacity) throw CapacityError("the oracle handles at most 8 piles");
  if (max_pile > 0xFFFF) throw CapacityError("the oracle handles piles up to 65535");
  Solver<hypergraph::OracleRules> solver(hypergraph::OracleRules(h), SolverLimits{budget});
  MismatchLog log("hypergraph", out);
  std::uint64_t positions = 0;
  for_each_box(h.n(), max_pile, [&](const SmallPiles& x) {
    ++positions;
    log.check(piles_array(x), "remoteness",
              json_integer(hypergraph::remoteness_mtf(hypergraph::from_small(x), h).value),
              solver.evaluate(x).remoteness);
  });
  return log.finish(positions);
}

// --- reduce-vc ------------------------------------------------------------

std::size_t min_vertex_cover(const moore::VcInstance& inst) {
  const std::size_t n = inst.vertices.size();
  if (n > 24) throw CapacityError("--check brute force handles at most 24 vertices");
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (auto [u, v] : inst.edges) {
      if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

int reduce_vc(const std::string& file, std::optional<std::size_t> cover_size, bool check, std::ostream& out) {
  moore::VcInstance inst = moore::parse_vc_instance(read_file(file));
  if (cover_size) inst.cover_size = *cover_size;
  moore::validate(inst);
  moore::VcReduction red = moore::reduce_vertex_cover(inst);

  Json rows = Json::array();
  for (std::size_t i = 0; i < red.row_labels.size(); ++i) {
    rows.push_back({{"label", red.row_labels[i]}, {"value", json_integer(red.position.piles[i])}});
  }
  Json doc;
  doc["rows"] = rows;
  doc["k"] = red.position.k;

  int code = kSuccess;
  if (check) {
    if (inst.edges.empty()) throw PreconditionError("--check needs a graph with at least one edge");
    const bool maximal = moore::has_maximal_move(red.position);
    const std::size_t cover = min_vertex_cover(inst);
    const bool consistent = maximal == (cover <= inst.cover_size);
    doc["check"] = {{"has_maximal_move", maximal},
                    {"min_vertex_cover", cover},
                    {"cover_size", inst.cover_size},
                    {"consistent", consistent}};
    if (!consistent) code = kMismatch;
  }
  out << doc.dump() << '\n';
  return code;
}

// --- compound -------------------------------------------------------------

template <class Product>
NodeValue product_value(Product product, const std::vector<std::size_t>& start, std::size_t budget,
                        std::optional<std::vector<std::size_t>>& move) {
  Solver<Product> solver(std::move(product), SolverLimits{budget});
  NodeValue v = solver.evaluate(start);
  move = solver.optimal_move(start);
  return v;
}

int compound(const std::string& file, bool oracle, std::size_t budget, std::ostream& out) {
  const std::filesystem::path path(file);
  Json spec = parse_json(read_file(path), file);
  if (!spec.is_object() || !spec.contains("mode") || !spec["mode"].is_string()) {
    throw ParseError("compound spec needs a \"mode\" string");
  }
  const std::string mode = spec["mode"].get<std::string>();
  if (mode != "conjunctive" && mode != "disjunctive") {
    throw ParseError("mode must be \"conjunctive\" or \"disjunctive\"");
  }
  if (!spec.contains("components") || !spec["components"].is_array() || spec["components"].empty()) {
    throw ParseError("\"components\" must be a non-empty array");
  }
  const bool conjunctive = mode == "conjunctive";

  std::vector<std::unique_ptr<Game>> games;
  for (const auto& c : spec["components"]) games.push_back(game_from_json(c, path.parent_path(), budget));

  Json position;
  position["mode"] = mode;
  position["components"] = Json::array();
  for (const auto& g : games) position["components"].push_back(g->position());

  Json parts = Json::array();
  std::optional<Remoteness> remoteness;
  std::optional<SgValue> sg;
  if (conjunctive) {
    std::vector<Remoteness> values;
    for (const auto& g : games) {
      values.push_back(g->remoteness());
      parts.push_back({{"remoteness", json_integer(values.back().value)}});
    }
    remoteness = conjunctive_remoteness(values);
  } else {
    std::vector<SgValue> values;
    for (const auto& g : games) {
      values.push_back(g->sg());
      parts.push_back({{"sg", json_integer(values.back().value)}});
    }
    sg = disjunctive_sg(values);
  }

  Json oracle_doc;
  std::optional<Json> move;
  bool agrees = true;
  if (oracle) {
    std::vector<ExplicitGame> graphs;
    std::vector<std::size_t> start;
    for (const auto& g : games) {
      graphs.push_back(g->explicit_graph());
      start.push_back(graphs.back().start());
    }
    std::optional<std::vector<std::size_t>> step;
    NodeValue v = conjunctive ? product_value(conjunctive_product(graphs), start, budget, step)
                              : product_value(disjunctive_product(graphs), start, budget, step);
    agrees = conjunctive ? remoteness->value == v.remoteness : sg->value == v.sg;
    oracle_doc["remoteness"] = v.remoteness;
    oracle_doc["sg"] = v.sg;
    oracle_doc["agrees"] = agrees;
    if (!conjunctive) remoteness = Remoteness(v.remoteness);
    if (step) {
      Json m;
      m["mode"] = mode;
      m["components"] = Json::array();
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        m["components"].push_back(Json::parse(graphs[i].id((*step)[i])));
      }
      move = m;
    }
  }

  Json result;
  result["game"] = "compound";
  result["position"] = position;
  if (remoteness) result["remoteness"] = json_integer(remoteness->value);
  result["class"] = to_string(remoteness ? remoteness->outcome() : sg->outcome());
  if (sg) result["sg"] = json_integer(sg->value);
  if (move) result["optimal_move"] = *move;
  result["components"] = parts;
  if (oracle) result["oracle"] = oracle_doc;
  out << result.dump() << '\n';
  return agrees ? kSuccess : kMismatch;
}

}  // namespace

std::size_t node_budget() {
  const char* env = std::getenv("REMOTENESS_MAX_NODES");
  if (env == nullptr || *env == '\0') return kDefaultMaxNodes;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ArgumentError("REMOTENESS_MAX_NODES must be a positive integer");
  }
  return value;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smith remoteness and Sprague-Grundy values of impartial games", "impartial"};
  app.require_subcommand(1);

  QueryArgs rq;
  auto* remoteness_cmd = app.add_subcommand("remoteness", "remoteness query (JSON)");
  Subcommands rs = add_game_subcommands(remoteness_cmd, rq);

  QueryArgs sq;
  auto* sg_cmd = app.add_subcommand("sg", "Sprague-Grundy query, oracle-backed where no formula exists (JSON)");
  Subcommands ss = add_game_subcommands(sg_cmd, sq);

  std::uint64_t a = 1, b = 1, max = 0, max_m = 0;
  std::size_t n = 0, k = 1, max_pile = 0;
  std::string file;

  auto* table_cmd = app.add_subcommand("table", "CSV tables");
  table_cmd->require_subcommand(1);
  auto* table_wy = table_cmd->add_subcommand("wythoff", "P-positions m,x_m,y_m");
  table_wy->add_option("--a", a)->check(CLI::PositiveNumber);
  table_wy->add_option("--b", b)->check(CLI::PositiveNumber);
  table_wy->add_option("--max-m", max_m)->required();
  auto* table_eu = table_cmd->add_subcommand("euclid", "remoteness grid x,y,remoteness for 1 <= x,y <= max");
  table_eu->add_option("--max", max)->required();

  auto* verify_cmd = app.add_subcommand("verify", "fast solvers against the generic engine");
  verify_cmd->require_subcommand(1);
  auto* verify_eu = verify_cmd->add_subcommand("euclid", "1 <= x,y <= max");
  verify_eu->add_option("--max", max)->required();
  auto* verify_wy = verify_cmd->add_subcommand("wythoff", "0 <= x,y <= max");
  verify_wy->add_option("--a", a)->check(CLI::PositiveNumber);
  verify_wy->add_option("--b", b)->check(CLI::PositiveNumber);
  verify_wy->add_option("--max", max)->required();
  auto* verify_mo = verify_cmd->add_subcommand("moore", "every pile vector with entries <= max-pile");
  verify_mo->add_option("--n", n)->required();
  verify_mo->add_option("--k", k)->required();
  verify_mo->add_option("--max-pile", max_pile)->required();
  auto* verify_hg = verify_cmd->add_subcommand("hypergraph", "MTF hypergraph, piles <= max-pile");
  verify_hg->add_option("--file", file)->required();
  verify_hg->add_option("--max-pile", max_pile)->required();

  std::optional<std::size_t> cover_size;
  bool check = false;
  auto* reduce_cmd = app.add_subcommand("reduce-vc", "Vertex Cover instance to a Moore's NIM position");
  reduce_cmd->add_option("--file", file, "graph JSON")->required();
  reduce_cmd->add_option("--cover-size", cover_size, "cover size c (overrides the file)")
      ->check(CLI::PositiveNumber);
  reduce_cmd->add_flag("--check", check, "brute-force both sides of the equivalence");

  bool oracle = false;
  auto* compound_cmd = app.add_subcommand("compound", "conjunctive or disjunctive compound");
  compound_cmd->add_option("--file", file, "compound spec JSON")->required();
  compound_cmd->add_flag("--oracle", oracle, "recompute on the explicit product graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    const std::size_t budget = node_budget();
    if (remoteness_cmd->parsed() || sg_cmd->parsed()) {
      const bool with_sg = sg_cmd->parsed();
      auto game = with_sg ? game_from_args(ss, sq, budget) : game_from_args(rs, rq, budget);
      out << query_result(*game, with_sg).dump() << '\n';
      return kSuccess;
    }
    if (table_wy->parsed()) return table_wythoff(a, b, max_m, out);
    if (table_eu->parsed()) return table_euclid(max, out);
    if (verify_eu->parsed()) return verify_euclid(max, budget, out);
    if (verify_wy->parsed()) return verify_wythoff(a, b, max, budget, out);
    if (verify_mo->parsed()) return verify_moore(n, k, max_pile, budget, out);
    if (verify_hg->parsed()) return verify_hypergraph(file, max_pile, budget, out);
    if (reduce_cmd->parsed()) return reduce_vc(file, cover_size, check, out);
    if (compound_cmd->parsed()) return compound(file, oracle, budget, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::bad_alloc&) {
    err << "capacity error: out of memory\n";
    return kCapacityError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace impartial::cli
