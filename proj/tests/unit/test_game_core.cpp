#include <gtest/gtest.h>

#include <random>

#include "impartial/compound.hpp"
#include "impartial/engine.hpp"
#include "impartial/euclid.hpp"
#include "impartial/explicit_game.hpp"
#include "impartial/hypergraph.hpp"
#include "support/oracles.hpp"

using namespace impartial;

namespace {

ExplicitGame path4() {
  return parse_explicit_game(R"({"nodes":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"]],"start":"a"})");
}

}  // namespace

TEST(Mex, Examples) {
  EXPECT_EQ(mex({}), 0u);
  EXPECT_EQ(mex({0, 1, 3}), 2u);
  EXPECT_EQ(mex({1, 2}), 0u);
  EXPECT_EQ(mex({2, 0, 1, 1}), 3u);
}

TEST(Engine, PathRemoteness) {
  ExplicitGame g = path4();
  Solver<ExplicitGame> s(g);
  EXPECT_EQ(s.remoteness(*g.find("d")), Remoteness(0u));
  EXPECT_EQ(s.remoteness(*g.find("c")), Remoteness(1u));
  EXPECT_EQ(s.remoteness(*g.find("b")), Remoteness(2u));
  EXPECT_EQ(s.remoteness(*g.find("a")), Remoteness(3u));
  EXPECT_EQ(s.optimal_move(*g.find("b")), g.find("c"));
  EXPECT_FALSE(s.optimal_move(*g.find("d")).has_value());
  EXPECT_EQ(s.classify(*g.find("d")), Outcome::P);
  EXPECT_EQ(s.classify(*g.find("c")), Outcome::N);
}

TEST(Engine, CycleIsReported) {
  ExplicitGame g = parse_explicit_game(R"({"nodes":["a","b","c"],"edges":[["a","b"],["b","c"],["c","a"]],"start":"a"})");
  EXPECT_THROW(smith_remoteness(g, g.start()), CycleError);
  try {
    sg_value(g, g.start());
  } catch (const CycleError& e) {
    EXPECT_STREQ(e.what(), "not an acyclic game");
  }
}

TEST(Engine, NodeBudget) {
  OnePileNim nim;
  EXPECT_THROW(smith_remoteness(nim, 100, SolverLimits{10}), CapacityError);
  EXPECT_NO_THROW(smith_remoteness(nim, 100, SolverLimits{101}));
}

TEST(Engine, LongChainDoesNotRecurse) {
  ExplicitGame g;
  const std::size_t n = 300000;
  for (std::size_t i = 0; i < n; ++i) g.add_node(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i, i - 1);
  EXPECT_EQ(smith_remoteness(g, n - 1), Remoteness(std::uint64_t{n - 1}));
}

TEST(Engine, OnePileNim) {
  OnePileNim nim;
  for (std::uint64_t s = 0; s <= 20; ++s) {
    EXPECT_EQ(sg_value(nim, s), SgValue(s));
    EXPECT_EQ(smith_remoteness(nim, s), Remoteness(std::uint64_t{s == 0 ? 0u : 1u}));
    EXPECT_TRUE(is_sg_decreasing(nim, s));
  }
}

TEST(Engine, TwoPileNimIsNotSgDecreasing) {
  using hypergraph::Hypergraph;
  hypergraph::OracleRules rules(Hypergraph::from_lists(2, {{0}, {1}}));
  EXPECT_TRUE(is_sg_decreasing(rules, SmallPiles{0, 0}));
  EXPECT_FALSE(is_sg_decreasing(rules, SmallPiles{1, 1}));
}

TEST(Engine, EuclidAdapter) {
  euclid::OracleRules rules(20);
  EXPECT_EQ(smith_remoteness(rules, {17, 11}), Remoteness(4u));
  EXPECT_EQ(sg_value(rules, {17, 12}), SgValue(0u));
  EXPECT_EQ(classify(rules, {17, 12}), Outcome::P);
  auto move = optimal_move(rules, {17, 11});
  ASSERT_TRUE(move.has_value());
  EXPECT_EQ(*move, std::make_pair(std::uint64_t{6}, std::uint64_t{11}));
}

// Engine against two independent formulations on random DAGs, plus the
// per-node recursion and SG properties.
TEST(Engine, RandomDagsAgainstPeelingAndNaiveGrundy) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 60;
    double density = 0.02 + 0.3 * (rng() % 100) / 100.0;
    ExplicitGame g = oracle::random_dag(n, density, rng);
    auto peel = oracle::peeling_remoteness(g);
    auto grundy = oracle::naive_grundy(g);
    Solver<ExplicitGame> s(g);
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t r = s.evaluate(v).remoteness;
      std::uint64_t sg = s.evaluate(v).sg;
      ASSERT_EQ(r, peel[v]);
      ASSERT_EQ(sg, grundy[v]);
      ASSERT_EQ(r % 2 == 0, sg == 0);

      const auto& succ = g.successors(v);
      if (succ.empty()) {
        ASSERT_EQ(r, 0u);
        continue;
      }
      std::optional<std::uint64_t> min_even;
      std::uint64_t max_all = 0;
      std::set<std::uint64_t> sgs;
      for (std::size_t w : succ) {
        std::uint64_t rw = s.evaluate(w).remoteness;
        if (rw % 2 == 0 && (!min_even || rw < *min_even)) min_even = rw;
        max_all = std::max(max_all, rw);
        ASSERT_NE(s.evaluate(w).sg, sg);  // (I)
        sgs.insert(s.evaluate(w).sg);
      }
      ASSERT_EQ(r, 1 + (min_even ? *min_even : max_all));
      for (std::uint64_t l = 0; l < sg; ++l) ASSERT_TRUE(sgs.count(l));  // (A)
      auto m = s.optimal_move(v);
      ASSERT_TRUE(m.has_value());
      ASSERT_EQ(s.evaluate(*m).remoteness + 1, r);
    }
  }
}

TEST(Compound, Formulas) {
  EXPECT_EQ(disjunctive_sg({}), SgValue(0u));
  std::vector<SgValue> g{SgValue(3u), SgValue(5u)};
  EXPECT_EQ(disjunctive_sg(g), SgValue(6u));
  std::vector<Remoteness> one{Remoteness(4u)};
  EXPECT_EQ(conjunctive_remoteness(one), Remoteness(4u));
  std::vector<Remoteness> three{Remoteness(4u), Remoteness(6u), Remoteness(5u)};
  EXPECT_EQ(conjunctive_remoteness(three), Remoteness(4u));
  EXPECT_THROW(conjunctive_remoteness({}), ArgumentError);
}

TEST(Compound, OnePileProducts) {
  auto dis = disjunctive_product<OnePileNim>({OnePileNim{}, OnePileNim{}});
  EXPECT_EQ(sg_value(dis, {3, 5}), SgValue(6u));
  auto con = conjunctive_product<OnePileNim>({OnePileNim{}, OnePileNim{}});
  EXPECT_EQ(smith_remoteness(con, {3, 5}), Remoteness(1u));
  EXPECT_EQ(smith_remoteness(con, {0, 5}), Remoteness(0u));
}

TEST(Compound, SingleComponentProductIsTheGame) {
  ExplicitGame g = path4();
  auto dis = disjunctive_product<ExplicitGame>({g});
  auto con = conjunctive_product<ExplicitGame>({g});
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::vector<std::vector<std::size_t>> expect;
    for (std::size_t w : g.successors(v)) expect.push_back({w});
    EXPECT_EQ(dis.successors({v}), expect);
    EXPECT_EQ(con.successors({v}), expect);
  }
}

TEST(Compound, RandomProductsMatchFormulas) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    ExplicitGame a = oracle::random_dag(1 + rng() % 25, 0.25, rng);
    ExplicitGame b = oracle::random_dag(1 + rng() % 25, 0.25, rng);
    auto dis = disjunctive_product<ExplicitGame>({a, b});
    auto con = conjunctive_product<ExplicitGame>({a, b});
    Solver<ExplicitGame> sa(a), sb(b);
    Solver<decltype(dis)> sd(dis);
    Solver<decltype(con)> sc(con);
    for (std::size_t u = 0; u < a.size(); ++u) {
      for (std::size_t v = 0; v < b.size(); ++v) {
        std::vector<SgValue> g{sa.sg(u), sb.sg(v)};
        std::vector<Remoteness> r{sa.remoteness(u), sb.remoteness(v)};
        ASSERT_EQ(sd.sg({u, v}), disjunctive_sg(g));
        ASSERT_EQ(sc.remoteness({u, v}), conjunctive_remoteness(r));
      }
    }
  }
}

TEST(ExplicitGame, JsonRoundTrip) {
  ExplicitGame g = parse_explicit_game(R"({"nodes":["x",2,"z"],"edges":[["x",2],[2,"z"]],"start":"x"})");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.id(1), "2");
  ExplicitGame h = parse_explicit_game(to_json(g));
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ(h.successors(0), g.successors(0));
}

TEST(ExplicitGame, ParseErrors) {
  EXPECT_THROW(parse_explicit_game("{"), ParseError);
  EXPECT_THROW(parse_explicit_game(R"({"nodes":["a","a"],"start":"a"})"), ParseError);
  EXPECT_THROW(parse_explicit_game(R"({"nodes":["a"],"edges":[["a","b"]],"start":"a"})"), ParseError);
  EXPECT_THROW(parse_explicit_game(R"({"nodes":["a"]})"), ParseError);
}

TEST(ExplicitGame, MaterializeKeepsValues) {
  euclid::OracleRules rules(40);
  ExplicitGame g = materialize(rules, {17, 12});
  EXPECT_EQ(smith_remoteness(g, g.start()), Remoteness(6u));
  EXPECT_THROW(materialize(rules, {17, 12}, 3), CapacityError);
}
