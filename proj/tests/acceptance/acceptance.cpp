// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every expected value comes from the generic engine or a
// brute-force routine in support/oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "impartial/compound.hpp"
#include "impartial/engine.hpp"
#include "impartial/euclid.hpp"
#include "impartial/explicit_game.hpp"
#include "impartial/hypergraph.hpp"
#include "impartial/moore.hpp"
#include "impartial/wythoff.hpp"
#include "support/oracles.hpp"

using namespace impartial;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message; later ones only bump the count.
class Check {
 public:
  void expect(bool cond, const std::function<std::string()>& what) {
    ++checks_;
    if (cond) return;
    if (failures_++ == 0) first_ = what();
  }
  Result done(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

template <class T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string piles_str(const std::vector<std::uint64_t>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

SmallPiles small(const std::vector<std::uint64_t>& x) {
  SmallPiles s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = static_cast<SmallPiles::value_type>(x[i]);
  return s;
}

// ---------------------------------------------------------------------------

double c1_elapsed_ms = 0;

Result c1_euclid_known_values() {
  using euclid::EuclidPosition;
  auto t0 = std::chrono::steady_clock::now();
  euclid::EuclidPlay a = euclid::euclid_play({17, 11});
  euclid::EuclidPlay b = euclid::euclid_play({17, 12});
  euclid::EuclidPlay c = euclid::euclid_play({17, 13});
  c1_elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  auto trace = [](std::vector<std::pair<int, int>> v) {
    std::vector<EuclidPosition> out;
    for (auto [x, y] : v) out.push_back({x, y});
    return out;
  };
  Check check;
  check.expect(a.remoteness == Remoteness(4u), [&] { return "R(17,11) = " + str(a.remoteness); });
  check.expect(b.remoteness == Remoteness(6u), [&] { return "R(17,12) = " + str(b.remoteness); });
  check.expect(c.remoteness == Remoteness(4u), [&] { return "R(17,13) = " + str(c.remoteness); });
  check.expect(a.trace == trace({{17, 11}, {6, 11}, {6, 5}, {1, 5}, {1, 1}}), [] { return "trace of (17,11)"; });
  check.expect(b.trace == trace({{17, 12}, {5, 12}, {5, 7}, {5, 2}, {3, 2}, {1, 2}, {1, 1}}),
               [] { return "trace of (17,12)"; });
  check.expect(c.trace == trace({{17, 13}, {4, 13}, {4, 5}, {4, 1}, {1, 1}}), [] { return "trace of (17,13)"; });
  check.expect(c1_elapsed_ms < 1.0, [] { return "three plays took " + std::to_string(c1_elapsed_ms) + " ms"; });
  return check.done("R = 4, 6, 4 with printed traces; solver time " + std::to_string(c1_elapsed_ms) + " ms");
}

Result c2_euclid_oracle_sweep() {
  euclid::OracleRules rules(60);
  Solver<euclid::OracleRules> solver(rules);
  Check check;
  for (std::uint64_t x = 1; x <= 60; ++x) {
    for (std::uint64_t y = 1; y <= 60; ++y) {
      const NodeValue& v = solver.evaluate({x, y});
      Remoteness r = euclid::remoteness_euclid({x, y});
      SgValue g = euclid::sg_euclid({x, y});
      check.expect(r.value == v.remoteness,
                   [&] { return "R" + str(euclid::EuclidPosition{x, y}) + " = " + str(r) + ", oracle " +
                                std::to_string(v.remoteness); });
      check.expect(g.value == v.sg, [&] {
        return "SG" + str(euclid::EuclidPosition{x, y}) + " = " + str(g) + ", oracle " + std::to_string(v.sg);
      });
    }
  }
  return check.done("3600 positions, remoteness and SG");
}

Result c3_euclid_uniqueness() {
  euclid::OracleRules rules(200);
  Solver<euclid::OracleRules> solver(rules);
  Check check;
  std::uint64_t p_count = 0, n_count = 0;
  for (std::uint64_t x = 1; x <= 200; ++x) {
    for (std::uint64_t y = 1; y <= 200; ++y) {
      if (std::gcd(x, y) != 1 || x == y) continue;
      auto succ = rules.successors({x, y});
      std::vector<std::pair<std::uint64_t, std::uint64_t>> p_succ;
      for (const auto& s : succ) {
        if (solver.classify(s) == Outcome::P) p_succ.push_back(s);
      }
      const bool is_p = solver.classify({x, y}) == Outcome::P;
      const std::string where = str(euclid::EuclidPosition{x, y});
      check.expect(is_p == euclid::is_p_euclid({x, y}), [&] { return "class of " + where; });
      if (is_p) {
        ++p_count;
        check.expect(succ.size() == 1, [&] { return where + " has " + std::to_string(succ.size()) + " moves"; });
      } else {
        ++n_count;
        check.expect(p_succ.size() == 1,
                     [&] { return where + " has " + std::to_string(p_succ.size()) + " P-successors"; });
        if (p_succ.size() == 1) {
          euclid::EuclidPosition t = euclid::winning_target({x, y});
          check.expect(t == euclid::EuclidPosition{p_succ[0].first, p_succ[0].second},
                       [&] { return "winning_target" + where + " = " + str(t); });
        }
      }
    }
  }
  return check.done(std::to_string(p_count) + " P and " + std::to_string(n_count) + " N coprime positions");
}

// Oracle values for Moore's NIM over the whole box 0..max_pile.
std::vector<std::uint64_t> moore_oracle(const moore::OracleRules& rules, std::size_t max_pile) {
  Solver<moore::OracleRules> solver(rules);
  std::vector<std::uint64_t> values(rules.index_bound());
  oracle::for_each_box(rules.n(), max_pile, [&](const std::vector<std::uint64_t>& x) {
    SmallPiles s = small(x);
    values[rules.index_of(s)] = solver.evaluate(s).remoteness;
  });
  return values;
}

Result c4_moore_p_formula() {
  Check check;
  std::uint64_t p_positions = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      moore::OracleRules rules(n, k, 15);
      auto values = moore_oracle(rules, 15);
      oracle::for_each_box(n, 15, [&](const std::vector<std::uint64_t>& x) {
        const std::uint64_t r = values[rules.index_of(small(x))];
        moore::MoorePosition p = oracle::to_moore(x, k);
        const bool p_by_oracle = r % 2 == 0;
        check.expect(moore::is_p_position(p) == p_by_oracle,
                     [&] { return "class of " + piles_str(x) + " k=" + std::to_string(k); });
        if (!p_by_oracle) return;
        ++p_positions;
        std::uint64_t stones = std::accumulate(x.begin(), x.end(), std::uint64_t{0});
        check.expect(2 * stones % (k + 1) == 0 && 2 * stones / (k + 1) == r, [&] {
          return piles_str(x) + " k=" + std::to_string(k) + ": oracle R " + std::to_string(r) + ", S " +
                 std::to_string(stones);
        });
        check.expect(moore::remoteness_p(p).value == r, [&] { return "remoteness_p" + piles_str(x); });
      });
    }
  }
  return check.done(std::to_string(p_positions) + " P-positions, n <= 4, piles <= 15");
}

Result c5_moore_full_remoteness() {
  Check check;
  std::uint64_t positions = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t max_pile = n <= 3 ? 15 : 7;
    for (std::size_t k = 1; k <= n; ++k) {
      moore::OracleRules rules(n, k, max_pile);
      auto values = moore_oracle(rules, max_pile);
      oracle::for_each_box(n, max_pile, [&](const std::vector<std::uint64_t>& x) {
        ++positions;
        const std::uint64_t r = values[rules.index_of(small(x))];
        Remoteness fast = moore::remoteness(oracle::to_moore(x, k));
        check.expect(fast.value == r, [&] {
          return piles_str(x) + " k=" + std::to_string(k) + ": " + str(fast) + ", oracle " + std::to_string(r);
        });
      });
    }
  }
  return check.done(std::to_string(positions) + " positions");
}

Result c6_moore_constant_d() {
  Check check;
  std::uint64_t subsets_with_moves = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t max_pile = n <= 3 ? 15 : 7;
    for (std::size_t k = 1; k <= n; ++k) {
      oracle::for_each_box(n, max_pile, [&](const std::vector<std::uint64_t>& x) {
        if (oracle::moore_p_by_columns(x, k)) return;
        moore::MoorePosition p = oracle::to_moore(x, k);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
          std::set<std::uint64_t> stones;
          oracle::for_each_moore_move(x, k, mask, [&](const std::vector<std::uint64_t>& z) {
            if (oracle::moore_p_by_columns(z, k)) stones.insert(std::accumulate(z.begin(), z.end(), std::uint64_t{0}));
          });
          const std::string where = piles_str(x) + " k=" + std::to_string(k) + " K=" + std::to_string(mask);
          check.expect(stones.size() <= 1, [&] { return where + ": " + std::to_string(stones.size()) + " values"; });
          std::vector<std::size_t> subset;
          for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) subset.push_back(i);
          }
          auto m = moore::subset_move_target(p, subset);
          check.expect(m.has_value() == !stones.empty(), [&] { return where + ": feasibility"; });
          if (m && !stones.empty()) {
            ++subsets_with_moves;
            check.expect(m->stones == *stones.begin(), [&] { return where + ": stone count"; });
          }
        }
      });
    }
  }
  return check.done(std::to_string(subsets_with_moves) + " (position, K) pairs with winning moves");
}

Result c7_vertex_cover_reduction() {
  Check check;
  std::uint64_t instances = 0;
  auto run = [&](std::size_t nv, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (edges.empty()) return;
    const std::size_t cover = oracle::min_vertex_cover(nv, edges);
    moore::VcInstance inst;
    for (std::size_t v = 0; v < nv; ++v) inst.vertices.push_back(std::to_string(v));
    inst.edges = edges;
    for (std::size_t c = 1; c <= nv; ++c) {
      inst.cover_size = c;
      ++instances;
      const bool maximal = moore::has_maximal_move(moore::reduce_vertex_cover(inst).position);
      check.expect(maximal == (cover <= c), [&] {
        return std::to_string(nv) + " vertices, " + std::to_string(edges.size()) + " edges, c=" + std::to_string(c) +
               ": maximal move " + (maximal ? "true" : "false") + ", min cover " + std::to_string(cover);
      });
    }
  };

  std::uint64_t graphs = 0;
  for (std::size_t nv = 1; nv <= 4; ++nv) {
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) all.emplace_back(u, v);
    }
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1u) edges.push_back(all[i]);
      }
      ++graphs;
      run(nv, edges);
    }
  }
  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t nv = 5 + rng() % 2;
    const double density = 0.15 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < density) edges.emplace_back(u, v);
      }
    }
    ++graphs;
    run(nv, edges);
  }
  return check.done(std::to_string(graphs) + " graphs (all on <= 4 vertices, 250 random on 5-6), " +
                    std::to_string(instances) + " (G, c) instances");
}

Result c8_mtf_hypergraphs() {
  using hypergraph::Hypergraph;
  Check check;
  std::uint64_t mtf_count = 0, positions = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t subsets = (std::size_t{1} << n) - 1;
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); ++family) {
      std::vector<hypergraph::VertexSet> edges;
      for (std::size_t s = 0; s < subsets; ++s) {
        if ((family >> s) & 1u) edges.push_back(s + 1);
      }
      Hypergraph h(n, edges);
      if (!hypergraph::is_mtf(h)) continue;
      ++mtf_count;
      Solver<hypergraph::OracleRules> solver{hypergraph::OracleRules(h)};
      oracle::for_each_box(n, 5, [&](const std::vector<std::uint64_t>& x) {
        ++positions;
        Remoteness fast = hypergraph::remoteness_mtf(x, h);
        std::uint64_t r = solver.evaluate(small(x)).remoteness;
        check.expect(fast.value == r, [&] {
          return "family " + std::to_string(family) + " on " + std::to_string(n) + " vertices at " + piles_str(x) +
                 ": " + str(fast) + ", oracle " + std::to_string(r);
        });
      });
    }
  }
  return check.done(std::to_string(mtf_count) + " MTF hypergraphs, " + std::to_string(positions) + " positions");
}

Result c9_one_pile_nim() {
  Check check;
  OnePileNim nim;
  for (std::uint64_t s = 0; s <= 20; ++s) {
    check.expect(is_sg_decreasing(nim, s), [&] { return "pile " + std::to_string(s) + " not SG-decreasing"; });
    Remoteness r = smith_remoteness(nim, s);
    check.expect(r == Remoteness(std::uint64_t{s == 0 ? 0u : 1u}),
                 [&] { return "R(" + std::to_string(s) + ") = " + str(r); });
  }
  return check.done("piles 0..20");
}

// floor(phi*m): for m > 0 the largest t with t^2 < t*m + m^2, searched from a
// hint.
std::uint64_t floor_phi_times(std::uint64_t m, std::uint64_t hint) {
  if (m == 0) return 0;
  auto below = [m](std::uint64_t t) { return t * t < t * m + m * m; };
  std::uint64_t t = hint > 2 ? hint - 2 : 0;
  while (!below(t)) --t;
  while (below(t + 1)) ++t;
  return t;
}

Result c10_wythoff_sequences() {
  Check check;
  const std::uint64_t M = 10000;
  for (std::uint64_t a = 1; a <= 4; ++a) {
    for (std::uint64_t b = 1; b <= 4; ++b) {
      wythoff::WythoffTable t({a, b});
      t.extend_to_index(M + 1);
      for (std::uint64_t m = 0; m <= M; ++m) {
        const std::uint64_t dx = t.x(m + 1) - t.x(m);
        const std::uint64_t dy = t.y(m + 1) - t.y(m);
        check.expect(t.x(m + 1) > t.x(m) && b <= dx && dx <= 2 * b && a + b <= dy && dy <= 2 * b + a, [&] {
          return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " m=" + std::to_string(m) + ": gaps " +
                 std::to_string(dx) + ", " + std::to_string(dy);
        });
      }
      if (b != 1 || a > 3) continue;
      for (std::uint64_t m = 0; m <= M; ++m) {
        Integer f = wythoff::fraenkel_closed_form(m, a);
        check.expect(f == t.x(m), [&] {
          return "a=" + std::to_string(a) + " m=" + std::to_string(m) + ": closed form " + str(f) + ", table " +
                 std::to_string(t.x(m));
        });
        if (a == 1) {
          const std::uint64_t phi = floor_phi_times(m, t.x(m));
          check.expect(phi == t.x(m), [&] { return "floor(phi*" + std::to_string(m) + ") = " + std::to_string(phi); });
        }
      }
    }
  }
  return check.done("(a,b) in [1..4]^2, m <= 10^4");
}

Result c11_wythoff_remoteness() {
  Check check;
  std::uint64_t n_positions = 0;
  std::size_t largest = 0;
  for (std::uint64_t a = 1; a <= 3; ++a) {
    for (std::uint64_t b = 1; b <= 3; ++b) {
      wythoff::WythoffParams params{a, b};
      wythoff::OracleRules rules(params, 30);
      Solver<wythoff::OracleRules> solver(rules);
      wythoff::WythoffTable table(params);
      for (std::uint64_t x = 0; x <= 30; ++x) {
        for (std::uint64_t y = 0; y <= 30; ++y) {
          const std::string where =
              "a=" + std::to_string(a) + " b=" + std::to_string(b) + " " + str(wythoff::WyPosition{x, y});
          const std::uint64_t r = solver.evaluate({x, y}).remoteness;
          Remoteness fast = wythoff::remoteness_wythoff({x, y}, table);
          check.expect(fast.value == r, [&] { return where + ": " + str(fast) + ", oracle " + std::to_string(r); });
          if (r % 2 == 0) continue;
          ++n_positions;
          std::vector<wythoff::WyPosition> brute;
          for (const auto& s : rules.successors({x, y})) {
            if (solver.classify(s) == Outcome::P) brute.push_back({s.first, s.second});
          }
          std::sort(brute.begin(), brute.end());
          std::vector<wythoff::WyPosition> fast_set;
          for (const auto& c : wythoff::candidate_p_targets({x, y}, table)) fast_set.push_back(c.target);
          largest = std::max(largest, brute.size());
          check.expect(brute == fast_set && brute.size() <= 6, [&] {
            return where + ": " + std::to_string(brute.size()) + " P-successors, " + std::to_string(fast_set.size()) +
                   " candidates";
          });
        }
      }
    }
  }
  return check.done(std::to_string(n_positions) + " N-positions, largest P-successor set " + std::to_string(largest));
}

// Full product graph on all node pairs, built from the library's successor
// relation, so the brute-force routines can score every pair at once.
template <class Product>
ExplicitGame full_product(const Product& product, std::size_t na, std::size_t nb) {
  ExplicitGame g;
  for (std::size_t i = 0; i < na * nb; ++i) g.add_node(std::to_string(i));
  for (std::size_t u = 0; u < na; ++u) {
    for (std::size_t v = 0; v < nb; ++v) {
      for (const auto& s : product.successors({u, v})) g.add_edge(u * nb + v, s[0] * nb + s[1]);
    }
  }
  return g;
}

Result c12_compound_values() {
  Check check;
  std::mt19937_64 rng(1234);
  const std::size_t games = 120;
  std::vector<ExplicitGame> pool;
  for (std::size_t i = 0; i < games; ++i) {
    const std::size_t n = 1 + rng() % 50;
    const double density = 0.03 + 0.3 * static_cast<double>(rng() % 100) / 100.0;
    pool.push_back(oracle::random_dag(n, density, rng));
  }
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < games; ++i) {
    const ExplicitGame& ga = pool[i];
    const ExplicitGame& gb = pool[(i + 1) % games];
    auto ra = oracle::peeling_remoteness(ga), rb = oracle::peeling_remoteness(gb);
    auto sa = oracle::naive_grundy(ga), sb = oracle::naive_grundy(gb);
    auto con = conjunctive_product<ExplicitGame>({ga, gb});
    auto dis = disjunctive_product<ExplicitGame>({ga, gb});
    auto con_r = oracle::peeling_remoteness(full_product(con, ga.size(), gb.size()));
    auto dis_g = oracle::naive_grundy(full_product(dis, ga.size(), gb.size()));
    Solver<decltype(con)> con_solver(con);
    Solver<decltype(dis)> dis_solver(dis);
    for (std::size_t u = 0; u < ga.size(); ++u) {
      for (std::size_t v = 0; v < gb.size(); ++v) {
        ++pairs;
        std::vector<Remoteness> r{Remoteness(ra[u]), Remoteness(rb[v])};
        std::vector<SgValue> g{SgValue(sa[u]), SgValue(sb[v])};
        const std::uint64_t idx = u * gb.size() + v;
        Remoteness formula_r = conjunctive_remoteness(r);
        SgValue formula_g = disjunctive_sg(g);
        check.expect(formula_r.value == con_r[idx] && formula_r == con_solver.remoteness({u, v}), [&] {
          return "games " + std::to_string(i) + " x " + std::to_string((i + 1) % games) + " at (" +
                 std::to_string(u) + "," + std::to_string(v) + "): conjunctive";
        });
        check.expect(formula_g.value == dis_g[idx] && formula_g == dis_solver.sg({u, v}), [&] {
          return "games " + std::to_string(i) + " x " + std::to_string((i + 1) % games) + " at (" +
                 std::to_string(u) + "," + std::to_string(v) + "): disjunctive";
        });
      }
    }
  }
  return check.done(std::to_string(games) + " random games, " + std::to_string(games) + " pairs, " +
                    std::to_string(pairs) + " product positions");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no time limit
  Result (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Euclid known values", 0, c1_euclid_known_values},
      {2, "Euclid oracle sweep", 30, c2_euclid_oracle_sweep},
      {3, "Euclid uniqueness", 60, c3_euclid_uniqueness},
      {4, "Moore P-formula", 300, c4_moore_p_formula},
      {5, "Moore N-algorithm", 300, c5_moore_full_remoteness},
      {6, "Moore constant D per subset", 0, c6_moore_constant_d},
      {7, "VC reduction equivalence", 120, c7_vertex_cover_reduction},
      {8, "MTF hypergraph remoteness", 120, c8_mtf_hypergraphs},
      {9, "SG-decreasing one-pile NIM", 0, c9_one_pile_nim},
      {10, "Wythoff sequences", 30, c10_wythoff_sequences},
      {11, "Wythoff remoteness", 300, c11_wythoff_remoteness},
      {12, "Compound values", 120, c12_compound_values},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = result.ok;
    std::string timing = std::to_string(seconds) + " s";
    if (c.limit_seconds > 0) {
      timing += " (limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
      if (seconds >= c.limit_seconds) ok = false;
    }
    if (!ok) ++failed;
    std::printf("%s  criterion %2d  %-30s %s; %s\n", ok ? "PASS" : "FAIL", c.id, c.name, timing.c_str(),
                result.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
