#pragma once

// Hypergraph NIM: a move strictly decreases exactly the piles of one
// hyperedge. For minimally transversal-free (MTF) hypergraphs the remoteness
// depends only on the smallest pile and on whether the set of smallest piles
// is a transversal.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "impartial/small_piles.hpp"
#include "impartial/values.hpp"

namespace impartial::hypergraph {

/// Vertex subset of {0, ..., 63} as a bitmask (bit i = vertex i).
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kDefaultMtfBound = 20;

class Hypergraph {
 public:
  /// Edges are non-empty subsets of the ground set; duplicates are dropped,
  /// first occurrence order is kept. Throws ArgumentError otherwise.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);
  Hypergraph(std::size_t n, VertexSet ground, std::vector<VertexSet> edges);

  /// Edge lists given as 0-based vertex indices.
  static Hypergraph from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& edges);

  std::size_t n() const { return n_; }
  VertexSet ground() const { return ground_; }
  const std::vector<VertexSet>& edges() const { return edges_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_;
  VertexSet ground_;
  std::vector<VertexSet> edges_;
};

VertexSet full_set(std::size_t n);

/// All non-empty subsets of [n] with at most k elements: Moore's NIM_{n,k}.
Hypergraph moore_hypergraph(std::size_t n, std::size_t k);

/// Parses {"n":int, "edges":[[int,...],...]} with 1-based vertex indices.
Hypergraph parse_hypergraph(std::string_view json);

/// T meets every edge of h.
bool is_transversal(VertexSet t, const Hypergraph& h);

/// Edges of h contained in s, over ground set s.
Hypergraph induced(const Hypergraph& h, VertexSet s);

/// H and its transversal family are disjoint, and for every proper subset S
/// with H_S non-empty, H_S contains one of its own transversals. Exponential in n;
/// CapacityError when n exceeds max_n.
bool is_mtf(const Hypergraph& h, std::size_t max_n = kDefaultMtfBound);

using Piles = std::vector<std::uint64_t>;

/// m(x), the smallest pile, and M(x), the piles attaining it.
std::pair<std::uint64_t, VertexSet> min_and_argmin(const Piles& x);

/// Layer of x: P(k) when M(x) is a transversal, N(k) otherwise, k = m(x).
struct Membership {
  Outcome outcome;
  std::uint64_t level;
};

/// Requires h to be MTF; the caller is responsible for that check.
Membership membership(const Piles& x, const Hypergraph& h);

/// 2k on P(k), 2k+1 on N(k). PreconditionError if h is not MTF.
Remoteness remoteness_mtf(const Piles& x, const Hypergraph& h, std::size_t max_n = kDefaultMtfBound);

/// A successor with remoteness one less, or empty at a terminal position.
/// PreconditionError if h is not MTF.
std::vector<std::uint64_t> optimal_move_mtf(const Piles& x, const Hypergraph& h,
                                            std::size_t max_n = kDefaultMtfBound);

/// Every x' <= x whose set of decreased piles is an edge, sorted
/// lexicographically.
std::vector<Piles> h_successors(const Piles& x, const Hypergraph& h);

/// Hypergraph NIM as a successor generator for the generic engine. Positions
/// use SmallPiles (n <= 8); successors are sorted lexicographically.
class OracleRules {
 public:
  using Position = SmallPiles;

  explicit OracleRules(Hypergraph h);

  void successors(const Position& p, std::vector<Position>& out) const;
  std::vector<Position> successors(const Position& p) const;
  bool is_terminal(const Position& p) const;

  const Hypergraph& hypergraph() const { return h_; }

 private:
  Hypergraph h_;
};

SmallPiles to_small(const Piles& x);
Piles from_small(const SmallPiles& x);

}  // namespace impartial::hypergraph
