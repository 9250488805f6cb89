#include "impartial/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include <json.hpp>

#include "impartial/errors.hpp"

namespace impartial::hypergraph {

VertexSet full_set(std::size_t n) {
  return n >= kMaxVertices ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges)
    : Hypergraph(n, full_set(n), std::move(edges)) {}

Hypergraph::Hypergraph(std::size_t n, VertexSet ground, std::vector<VertexSet> edges)
    : n_(n), ground_(ground) {
  if (n > kMaxVertices) throw ArgumentError("hypergraphs are limited to 64 vertices");
  if ((ground & ~full_set(n)) != 0) throw ArgumentError("ground set exceeds [n]");
  for (VertexSet e : edges) {
    if (e == 0) throw ArgumentError("hyperedges must be non-empty");
    if ((e & ~ground) != 0) throw ArgumentError("hyperedge leaves the ground set");
    if (std::find(edges_.begin(), edges_.end(), e) == edges_.end()) edges_.push_back(e);
  }
}

Hypergraph Hypergraph::from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<VertexSet> masks;
  for (const auto& e : edges) {
    VertexSet m = 0;
    for (std::size_t v : e) {
      if (v >= n) throw ArgumentError("hyperedge vertex out of range");
      m |= VertexSet{1} << v;
    }
    masks.push_back(m);
  }
  return Hypergraph(n, std::move(masks));
}

Hypergraph moore_hypergraph(std::size_t n, std::size_t k) {
  if (n > 20) throw CapacityError("moore_hypergraph enumerates 2^n subsets; n <= 20");
  std::vector<VertexSet> edges;
  for (VertexSet s = 1; s <= full_set(n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) <= k) edges.push_back(s);
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  using json = nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid hypergraph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("hypergraph JSON needs an integer \"n\"");
  }
  long long n = doc["n"].get<long long>();
  if (n < 1 || n > static_cast<long long>(kMaxVertices)) throw ParseError("\"n\" must be in 1..64");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("hypergraph JSON needs \"edges\"");
  std::vector<VertexSet> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.empty()) throw ParseError("each hyperedge must be a non-empty array");
    VertexSet m = 0;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw ParseError("hyperedge vertices must be integers");
      long long i = v.get<long long>();
      if (i < 1 || i > n) throw ParseError("hyperedge vertex out of range 1..n");
      m |= VertexSet{1} << (i - 1);
    }
    edges.push_back(m);
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

bool is_transversal(VertexSet t, const Hypergraph& h) {
  for (VertexSet e : h.edges()) {
    if ((e & t) == 0) return false;
  }
  return true;
}

Hypergraph induced(const Hypergraph& h, VertexSet s) {
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    if ((e & ~s) == 0) edges.push_back(e);
  }
  return Hypergraph(h.n(), s & h.ground(), std::move(edges));
}

bool is_mtf(const Hypergraph& h, std::size_t max_n) {
  if (h.n() > max_n) {
    throw CapacityError("MTF test enumerates 2^n subsets; n=" + std::to_string(h.n()) +
                        " exceeds the bound " + std::to_string(max_n));
  }
  for (VertexSet e : h.edges()) {
    if (is_transversal(e, h)) return false;
  }
  const VertexSet ground = h.ground();
  // proper non-empty subsets of the ground set; an empty H_S imposes nothing
  for (VertexSet s = (ground - 1) & ground; s != 0; s = (s - 1) & ground) {
    bool has_edge = false;
    bool has_self_transversal = false;
    for (VertexSet e : h.edges()) {
      if ((e & ~s) != 0) continue;
      has_edge = true;
      bool meets_all = true;
      for (VertexSet f : h.edges()) {
        if ((f & ~s) == 0 && (f & e) == 0) {
          meets_all = false;
          break;
        }
      }
      if (meets_all) {
        has_self_transversal = true;
        break;
      }
    }
    if (has_edge && !has_self_transversal) return false;
  }
  return true;
}

std::pair<std::uint64_t, VertexSet> min_and_argmin(const Piles& x) {
  if (x.empty()) return {0, 0};
  std::uint64_t m = *std::min_element(x.begin(), x.end());
  VertexSet where = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == m) where |= VertexSet{1} << i;
  }
  return {m, where};
}

namespace {

void check_length(const Piles& x, const Hypergraph& h) {
  if (x.size() != h.n()) {
    throw ArgumentError("position has " + std::to_string(x.size()) + " piles but the hypergraph has " +
                        std::to_string(h.n()) + " vertices");
  }
}

void require_mtf(const Hypergraph& h, std::size_t max_n) {
  if (!is_mtf(h, max_n)) throw PreconditionError("hypergraph is not minimally transversal-free");
}

}  // namespace

Membership membership(const Piles& x, const Hypergraph& h) {
  check_length(x, h);
  auto [m, where] = min_and_argmin(x);
  return {is_transversal(where, h) ? Outcome::P : Outcome::N, m};
}

Remoteness remoteness_mtf(const Piles& x, const Hypergraph& h, std::size_t max_n) {
  require_mtf(h, max_n);
  Membership mem = membership(x, h);
  Integer r = Integer(mem.level) * 2;
  if (mem.outcome == Outcome::N) r += 1;
  return Remoteness(std::move(r));
}

std::vector<std::uint64_t> optimal_move_mtf(const Piles& x, const Hypergraph& h, std::size_t max_n) {
  require_mtf(h, max_n);
  Membership mem = membership(x, h);
  auto [m, where] = min_and_argmin(x);
  if (mem.outcome == Outcome::N) {
    // Lift into P(m): an edge avoiding M(x) that meets every edge avoiding
    // M(x); drop its piles to m.
    Hypergraph outside = induced(h, h.ground() & ~where);
    for (VertexSet e : outside.edges()) {
      if (!is_transversal(e, outside)) continue;
      Piles y = x;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (e & (VertexSet{1} << i)) y[i] = m;
      }
      return y;
    }
    throw Error("internal: N(k) position without a move into P(k)");
  }
  if (m == 0) return {};  // P(0) positions are terminal
  // From P(m) every move lowers the minimum; the longest resistance is a slow
  // move that lands in N(m-1).
  for (VertexSet e : h.edges()) {
    Piles y = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (e & (VertexSet{1} << i)) y[i] -= 1;
    }
    if (membership(y, h).outcome == Outcome::N) return y;
  }
  throw Error("internal: P(k) position without a move into N(k-1)");
}

namespace {

template <class Vec, class Emit>
void for_each_h_move(const Vec& x, const Hypergraph& h, Emit emit) {
  for (VertexSet e : h.edges()) {
    std::vector<std::size_t> idx;
    bool blocked = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (e & (VertexSet{1} << i)) {
        if (x[i] == 0) blocked = true;
        idx.push_back(i);
      }
    }
    if (blocked) continue;
    Vec y = x;
    for (std::size_t i : idx) y[i] = 0;
    while (true) {
      emit(y);
      std::size_t t = idx.size();
      while (t > 0) {
        --t;
        if (y[idx[t]] + 1 < x[idx[t]]) {
          ++y[idx[t]];
          break;
        }
        y[idx[t]] = 0;
        if (t == 0) goto next_edge;
      }
    }
  next_edge:;
  }
}

}  // namespace

std::vector<Piles> h_successors(const Piles& x, const Hypergraph& h) {
  check_length(x, h);
  std::vector<Piles> out;
  for_each_h_move(x, h, [&](const Piles& y) { out.push_back(y); });
  std::sort(out.begin(), out.end());
  return out;
}

OracleRules::OracleRules(Hypergraph h) : h_(std::move(h)) {
  if (h_.n() > SmallPiles::kCapacity) throw ArgumentError("hypergraph oracle supports n <= 8");
}

void OracleRules::successors(const Position& p, std::vector<Position>& out) const {
  for_each_h_move(p, h_, [&](const Position& y) { out.push_back(y); });
  std::sort(out.begin(), out.end());
}

std::vector<OracleRules::Position> OracleRules::successors(const Position& p) const {
  std::vector<Position> out;
  successors(p, out);
  return out;
}

bool OracleRules::is_terminal(const Position& p) const {
  for (VertexSet e : h_.edges()) {
    bool open = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if ((e & (VertexSet{1} << i)) && p[i] == 0) open = false;
    }
    if (open) return false;
  }
  return true;
}

SmallPiles to_small(const Piles& x) {
  SmallPiles s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > std::numeric_limits<SmallPiles::value_type>::max()) {
      throw ArgumentError("pile too large for the oracle adapter");
    }
    s[i] = static_cast<SmallPiles::value_type>(x[i]);
  }
  return s;
}

Piles from_small(const SmallPiles& x) { return Piles(x.begin(), x.end()); }

}  // namespace impartial::hypergraph
