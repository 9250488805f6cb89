#pragma once

// Moore's NIM_{n,k}: n piles, a move strictly decreases between 1 and k of
// them. P-positions are those whose Bouton matrix has every column sum
// divisible by k+1.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "impartial/integer.hpp"
#include "impartial/small_piles.hpp"
#include "impartial/values.hpp"

namespace impartial::moore {

struct MoorePosition {
  std::vector<Integer> piles;
  std::size_t k = 1;

  std::size_t n() const { return piles.size(); }
};

/// Throws ArgumentError unless n >= 1, 1 <= k <= n and all piles >= 0.
void validate(const MoorePosition& p);

/// Binary digits of the piles, one row per pile, column j holding bit j.
class BoutonMatrix {
 public:
  explicit BoutonMatrix(const MoorePosition& p);

  std::size_t rows() const { return rows_; }
  /// N+1, where N is the highest set bit over all piles (one column if all
  /// piles are zero).
  std::size_t columns() const { return columns_; }
  std::size_t k() const { return k_; }

  bool bit(std::size_t row, std::size_t column) const { return bits_[row * columns_ + column] != 0; }
  std::size_t column_sum(std::size_t column) const { return sums_[column]; }
  /// a_j: the column sum modulo k+1.
  std::size_t residue(std::size_t column) const { return sums_[column] % (k_ + 1); }
  Integer row_value(std::size_t row) const;

 private:
  std::size_t rows_ = 0;
  std::size_t columns_ = 0;
  std::size_t k_ = 1;
  std::vector<unsigned char> bits_;
  std::vector<std::size_t> sums_;
};

/// S(x), the total number of stones.
Integer stone_count(const MoorePosition& p);

/// M(x) = sum_j (k+1)^j a_j.
Integer moore_function(const MoorePosition& p);

bool is_p_position(const MoorePosition& p);

/// 2 S(x) / (k+1) for a P-position; PreconditionError on N-positions.
Remoteness remoteness_p(const MoorePosition& p);

/// A winning move supported inside a fixed pile subset K.
struct SubsetMove {
  std::vector<std::size_t> subset;  // 0-based pile indices, ascending
  std::vector<Integer> target;      // the P-position reached
  Integer stones;                   // S(target), the same for every such move
};

/// Finds a move that decreases only piles in subset (|subset| == k) and
/// reaches a P-position, or nullopt when none exists. Feasibility is decided
/// column by column from the most significant bit, tracking which piles of
/// the subset still agree with x on every higher bit.
/// PreconditionError if p is a P-position; ArgumentError if the subset is not
/// k distinct in-range indices.
std::optional<SubsetMove> subset_move_target(const MoorePosition& p,
                                             std::span<const std::size_t> subset);

/// Winning move leaving the fewest stones, taken from the lexicographically
/// first subset attaining the minimum. nullopt on P-positions.
std::optional<SubsetMove> best_winning_move(const MoorePosition& p);

/// R(x): 2S/(k+1) on P-positions, 1 + 2D*/(k+1) on N-positions where D* is
/// the fewest stones any winning move can leave. Exponential in min(k, n-k).
Remoteness remoteness(const MoorePosition& p);

/// A successor with remoteness R(x)-1, or nullopt at the terminal position.
std::optional<std::vector<Integer>> optimal_move(const MoorePosition& p);

/// S(x) - sum_j 2^j a_j: no winning move can leave fewer stones.
/// PreconditionError on P-positions.
Integer maximal_move_bound(const MoorePosition& p);

/// Whether some winning move leaves exactly maximal_move_bound stones.
/// Decided by a column-wise search over the set of piles already decreased,
/// with piles of equal remaining low bits merged, instead of enumerating all
/// k-subsets. PreconditionError on P-positions.
bool has_maximal_move(const MoorePosition& p);

// --- Vertex Cover reduction ----------------------------------------------

struct VcInstance {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices
  std::size_t cover_size = 1;
};

/// Throws ArgumentError on self-loops, dangling indices or cover_size < 1.
void validate(const VcInstance& instance);

/// Parses {"vertices":[...], "edges":[[u,v],...], "c":int}. Vertex ids may be
/// strings or integers. Throws ParseError.
VcInstance parse_vc_instance(std::string_view json);

struct VcReduction {
  MoorePosition position;
  std::vector<std::string> row_labels;  // "v:<id>" or "slack:<edge>:<slot>"
};

/// Builds the matrix M_G: one row per vertex, then cover_size slack rows per
/// edge; column e (bit e) belongs to the e-th edge. Rows are read as binary
/// piles with k = cover_size. Every column residue of the result is 1.
VcReduction reduce_vertex_cover(const VcInstance& instance);

// --- Oracle adapter ------------------------------------------------------

/// Moore's NIM as an explicit successor generator for the generic engine.
/// Successors are every z <= x (componentwise) differing from x in 1..k
/// piles, in lexicographic order. Positions with piles <= max_pile are
/// densely indexed.
class OracleRules {
 public:
  using Position = SmallPiles;

  OracleRules(std::size_t n, std::size_t k, std::size_t max_pile);

  void successors(const Position& p, std::vector<Position>& out) const;
  std::vector<Position> successors(const Position& p) const;
  bool is_terminal(const Position& p) const;

  std::size_t index_bound() const { return bound_; }
  std::size_t index_of(const Position& p) const;

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t radix_;
  std::size_t bound_;
};

MoorePosition to_position(const SmallPiles& piles, std::size_t k);

}  // namespace impartial::moore
