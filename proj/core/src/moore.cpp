#include "impartial/moore.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>

#include "impartial/errors.hpp"

namespace impartial::moore {

void validate(const MoorePosition& p) {
  if (p.piles.empty()) throw ArgumentError("Moore's NIM needs at least one pile");
  if (p.k < 1 || p.k > p.piles.size()) {
    throw ArgumentError("k must satisfy 1 <= k <= n (k=" + std::to_string(p.k) +
                        ", n=" + std::to_string(p.piles.size()) + ")");
  }
  for (const auto& x : p.piles) {
    if (x < 0) throw ArgumentError("pile sizes must be non-negative");
  }
}

BoutonMatrix::BoutonMatrix(const MoorePosition& p) : rows_(p.n()), k_(p.k) {
  validate(p);
  std::size_t top = 0;
  for (const auto& x : p.piles) {
    if (x > 0) top = std::max<std::size_t>(top, boost::multiprecision::msb(x));
  }
  columns_ = top + 1;
  bits_.assign(rows_ * columns_, 0);
  sums_.assign(columns_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& x = p.piles[i];
    if (x == 0) continue;
    for (std::size_t j = 0; j < columns_; ++j) {
      if (boost::multiprecision::bit_test(x, static_cast<unsigned>(j))) {
        bits_[i * columns_ + j] = 1;
        ++sums_[j];
      }
    }
  }
}

Integer BoutonMatrix::row_value(std::size_t row) const {
  Integer v = 0;
  for (std::size_t j = columns_; j-- > 0;) {
    v <<= 1;
    if (bit(row, j)) v |= 1;
  }
  return v;
}

Integer stone_count(const MoorePosition& p) {
  Integer s = 0;
  for (const auto& x : p.piles) s += x;
  return s;
}

Integer moore_function(const MoorePosition& p) {
  BoutonMatrix m(p);
  Integer value = 0;
  Integer weight = 1;
  for (std::size_t j = 0; j < m.columns(); ++j) {
    value += weight * m.residue(j);
    weight *= (p.k + 1);
  }
  return value;
}

bool is_p_position(const MoorePosition& p) {
  BoutonMatrix m(p);
  for (std::size_t j = 0; j < m.columns(); ++j) {
    if (m.residue(j) != 0) return false;
  }
  return true;
}

Remoteness remoteness_p(const MoorePosition& p) {
  if (!is_p_position(p)) throw PreconditionError("remoteness_p requires a P-position");
  Integer s = stone_count(p);
  // Every column sum is a multiple of k+1, hence so is S.
  if (s % (p.k + 1) != 0) throw Error("internal: stone count of a P-position not divisible by k+1");
  return Remoteness(2 * s / (p.k + 1));
}

namespace {

std::vector<std::size_t> checked_subset(const MoorePosition& p, std::span<const std::size_t> subset) {
  std::vector<std::size_t> k_set(subset.begin(), subset.end());
  std::sort(k_set.begin(), k_set.end());
  if (k_set.size() != p.k) {
    throw ArgumentError("subset must contain exactly k=" + std::to_string(p.k) + " piles");
  }
  if (std::adjacent_find(k_set.begin(), k_set.end()) != k_set.end()) {
    throw ArgumentError("subset contains a repeated pile index");
  }
  if (!k_set.empty() && k_set.back() >= p.n()) throw ArgumentError("pile index out of range");
  return k_set;
}

// Column targets for a subset: c_j = number of ones the subset's piles must
// carry in column j after the move so that the whole column sum is divisible
// by k+1. Returns the stone count D every such move leaves.
Integer subset_targets(const BoutonMatrix& m, const MoorePosition& p,
                       const std::vector<std::size_t>& k_set, std::vector<std::size_t>& c) {
  std::vector<bool> in_k(p.n(), false);
  for (auto i : k_set) in_k[i] = true;
  Integer d = 0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (!in_k[i]) d += p.piles[i];
  }
  c.assign(m.columns(), 0);
  for (std::size_t j = 0; j < m.columns(); ++j) {
    std::size_t outside = 0;
    for (std::size_t i = 0; i < p.n(); ++i) {
      if (!in_k[i] && m.bit(i, j)) ++outside;
    }
    std::size_t s = outside % (p.k + 1);
    c[j] = (p.k + 1 - s) % (p.k + 1);
    if (c[j] != 0) d += Integer(c[j]) << j;
  }
  return d;
}

struct Step {
  std::uint64_t before;
  std::uint64_t stay;  // tight piles with bit 1 that keep emitting 1
};

// Tight-set DP over one subset. Bit r of a mask refers to k_set[r].
std::optional<std::vector<Integer>> realize_subset_move(const BoutonMatrix& m, const MoorePosition& p,
                                                        const std::vector<std::size_t>& k_set,
                                                        const std::vector<std::size_t>& c) {
  const std::size_t k = k_set.size();
  if (k > 62) throw CapacityError("subset DP supports k <= 62");
  const std::uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
  const std::size_t cols = m.columns();

  // parents[j] maps the tight set after column j to how it was reached.
  std::vector<std::map<std::uint64_t, Step>> parents(cols);
  std::vector<std::uint64_t> states{full};
  for (std::size_t jj = cols; jj-- > 0;) {
    std::uint64_t ones = 0;
    for (std::size_t r = 0; r < k; ++r) {
      if (m.bit(k_set[r], jj)) ones |= (1ULL << r);
    }
    auto& layer = parents[jj];
    for (std::uint64_t tight : states) {
      const std::uint64_t a = tight & ones;
      const std::uint64_t b = tight & ~ones;
      const std::size_t loose = static_cast<std::size_t>(std::popcount(full & ~tight));
      for (std::uint64_t x = a;; x = (x - 1) & a) {
        const std::size_t kept = static_cast<std::size_t>(std::popcount(x));
        if (kept <= c[jj] && c[jj] - kept <= loose) layer.try_emplace(x | b, Step{tight, x});
        if (x == 0) break;
      }
    }
    states.clear();
    for (const auto& [mask, step] : layer) states.push_back(mask);
    if (states.empty()) return std::nullopt;
  }

  // A final tight set equal to the whole subset would mean z == x, which is
  // impossible from an N-position; skip it regardless.
  std::optional<std::uint64_t> final_state;
  for (auto s : states) {
    if (s != full) {
      final_state = s;
      break;
    }
  }
  if (!final_state) return std::nullopt;

  std::vector<std::uint64_t> tight_before(cols);
  std::vector<std::uint64_t> stay(cols);
  std::uint64_t cur = *final_state;
  for (std::size_t j = 0; j < cols; ++j) {
    const Step& step = parents[j].at(cur);
    tight_before[j] = step.before;
    stay[j] = step.stay;
    cur = step.before;
  }

  std::vector<Integer> target = p.piles;
  std::vector<Integer> z(k, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t extra = c[j] - static_cast<std::size_t>(std::popcount(stay[j]));
    for (std::size_t r = 0; r < k; ++r) {
      bool emit;
      if (tight_before[j] & (1ULL << r)) {
        emit = m.bit(k_set[r], j) && (stay[j] & (1ULL << r));
      } else {
        emit = extra > 0;
        if (emit) --extra;
      }
      if (emit) boost::multiprecision::bit_set(z[r], static_cast<unsigned>(j));
    }
  }
  for (std::size_t r = 0; r < k; ++r) target[k_set[r]] = z[r];
  return target;
}

}  // namespace

std::optional<SubsetMove> subset_move_target(const MoorePosition& p, std::span<const std::size_t> subset) {
  validate(p);
  if (is_p_position(p)) throw PreconditionError("subset_move_target requires an N-position");
  std::vector<std::size_t> k_set = checked_subset(p, subset);
  BoutonMatrix m(p);
  std::vector<std::size_t> c;
  Integer d = subset_targets(m, p, k_set, c);
  auto target = realize_subset_move(m, p, k_set, c);
  if (!target) return std::nullopt;
  SubsetMove move{std::move(k_set), std::move(*target), std::move(d)};
  if (stone_count(MoorePosition{move.target, p.k}) != move.stones) {
    throw Error("internal: realized subset move does not leave the predicted stone count");
  }
  return move;
}

std::optional<SubsetMove> best_winning_move(const MoorePosition& p) {
  validate(p);
  if (is_p_position(p)) return std::nullopt;
  BoutonMatrix m(p);
  const std::size_t n = p.n();
  const std::size_t k = p.k;

  std::optional<SubsetMove> best;
  std::vector<std::size_t> k_set(k);
  for (std::size_t i = 0; i < k; ++i) k_set[i] = i;
  std::vector<std::size_t> c;
  while (true) {
    Integer d = subset_targets(m, p, k_set, c);
    if (!best || d < best->stones) {
      if (auto target = realize_subset_move(m, p, k_set, c)) {
        best = SubsetMove{k_set, std::move(*target), std::move(d)};
      }
    }
    // next k-combination of [0, n) in lexicographic order
    std::size_t i = k;
    while (i > 0 && k_set[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++k_set[i - 1];
    for (std::size_t t = i; t < k; ++t) k_set[t] = k_set[t - 1] + 1;
  }
  if (!best) throw Error("internal: N-position without a winning move");
  return best;
}

Remoteness remoteness(const MoorePosition& p) {
  validate(p);
  if (is_p_position(p)) return remoteness_p(p);
  auto move = best_winning_move(p);
  if (move->stones % (p.k + 1) != 0) throw Error("internal: winning move left a non-P stone count");
  return Remoteness(1 + 2 * move->stones / (p.k + 1));
}

std::optional<std::vector<Integer>> optimal_move(const MoorePosition& p) {
  validate(p);
  if (!is_p_position(p)) return best_winning_move(p)->target;
  BoutonMatrix m(p);
  // From a P-position take one stone from the first pile holding the lowest
  // nonzero digit; every reply then removes exactly k stones.
  for (std::size_t j = 0; j < m.columns(); ++j) {
    if (m.column_sum(j) == 0) continue;
    for (std::size_t i = 0; i < p.n(); ++i) {
      if (m.bit(i, j)) {
        std::vector<Integer> y = p.piles;
        y[i] -= 1;
        return y;
      }
    }
  }
  return std::nullopt;  // terminal
}

Integer maximal_move_bound(const MoorePosition& p) {
  validate(p);
  if (is_p_position(p)) throw PreconditionError("maximal_move_bound requires an N-position");
  BoutonMatrix m(p);
  Integer bound = stone_count(p);
  for (std::size_t j = 0; j < m.columns(); ++j) bound -= Integer(m.residue(j)) << j;
  return bound;
}

namespace {

// A maximal move lowers every column sum by exactly a_j. The search walks the
// columns from the top, keeping the multiset of piles already decreased
// ("loose" piles, free below their first dropped bit). Only the bits at or
// below the current column matter for the rest of the search, so piles are
// identified by that suffix of their binary expansion.
class MaximalMoveSearch {
 public:
  explicit MaximalMoveSearch(const BoutonMatrix& m) : m_(m) {
    rows_.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      rows_[i].resize(m.columns());
      for (std::size_t j = 0; j < m.columns(); ++j) rows_[i][j] = m.bit(i, j) ? '1' : '0';
    }
  }

  bool run() {
    const std::size_t top = m_.columns() - 1;
    return search(static_cast<long>(top), Multiset{});
  }

 private:
  using Multiset = std::map<std::string, std::size_t>;

  static std::size_t total(const Multiset& s) {
    std::size_t t = 0;
    for (const auto& [key, count] : s) t += count;
    return t;
  }

  Multiset all_rows(std::size_t j) const {
    Multiset all;
    for (const auto& row : rows_) ++all[row.substr(0, j + 1)];
    return all;
  }

  static std::string key(long j, const Multiset& loose) {
    std::string out = std::to_string(j) + "|";
    for (const auto& [bits, count] : loose) out += bits + ":" + std::to_string(count) + ";";
    return out;
  }

  bool search(long j, const Multiset& loose) {
    if (j < 0) return total(loose) >= 1;
    std::string memo_key = key(j, loose);
    if (failed_.count(memo_key)) return false;

    const auto col = static_cast<std::size_t>(j);
    Multiset tight = all_rows(col);
    std::size_t loose_ones = 0;
    std::size_t loose_zeros = 0;
    for (const auto& [bits, count] : loose) {
      tight[bits] -= count;
      (bits[col] == '1' ? loose_ones : loose_zeros) += count;
    }
    std::vector<std::pair<std::string, std::size_t>> droppable;
    for (const auto& [bits, count] : tight) {
      if (count > 0 && bits[col] == '1') droppable.emplace_back(bits, count);
    }
    const std::size_t cap = m_.k() - total(loose);
    const std::size_t a = m_.residue(col);

    std::vector<std::size_t> choice(droppable.size(), 0);
    bool found = enumerate(0, 0, cap, a, loose_ones, loose_zeros, droppable, choice, j, loose);
    if (!found) failed_.insert(std::move(memo_key));
    return found;
  }

  // Chooses how many piles of each droppable group start decreasing at this
  // column; joined piles emit 0 here, loose piles absorb the remainder.
  bool enumerate(std::size_t g, std::size_t joined, std::size_t cap, std::size_t a,
                 std::size_t loose_ones, std::size_t loose_zeros,
                 const std::vector<std::pair<std::string, std::size_t>>& droppable,
                 std::vector<std::size_t>& choice, long j, const Multiset& loose) {
    if (g == droppable.size()) {
      // net change = -joined + delta_loose with delta_loose in [-ones, +zeros]
      if (joined + loose_ones < a || joined > a + loose_zeros) return false;
      Multiset next;
      const auto col = static_cast<std::size_t>(j);
      for (const auto& [bits, count] : loose) next[bits.substr(0, col)] += count;
      for (std::size_t i = 0; i < droppable.size(); ++i) {
        if (choice[i]) next[droppable[i].first.substr(0, col)] += choice[i];
      }
      return search(j - 1, next);
    }
    const std::size_t limit = std::min(droppable[g].second, cap - joined);
    for (std::size_t t = 0; t <= limit; ++t) {
      choice[g] = t;
      if (enumerate(g + 1, joined + t, cap, a, loose_ones, loose_zeros, droppable, choice, j, loose)) {
        return true;
      }
    }
    choice[g] = 0;
    return false;
  }

  const BoutonMatrix& m_;
  std::vector<std::string> rows_;  // rows_[i][j] = bit j of pile i
  std::unordered_set<std::string> failed_;
};

}  // namespace

bool has_maximal_move(const MoorePosition& p) {
  validate(p);
  if (is_p_position(p)) throw PreconditionError("has_maximal_move requires an N-position");
  BoutonMatrix m(p);
  return MaximalMoveSearch(m).run();
}

OracleRules::OracleRules(std::size_t n, std::size_t k, std::size_t max_pile)
    : n_(n), k_(k), radix_(max_pile + 1), bound_(1) {
  if (n < 1 || n > SmallPiles::kCapacity) throw ArgumentError("oracle supports 1..8 piles");
  if (k < 1 || k > n) throw ArgumentError("k must satisfy 1 <= k <= n");
  if (max_pile > 0xFFFF) throw ArgumentError("oracle piles are limited to 65535");
  for (std::size_t i = 0; i < n; ++i) {
    if (bound_ > (std::size_t{1} << 32) / radix_) throw CapacityError("oracle index space too large");
    bound_ *= radix_;
  }
}

std::size_t OracleRules::index_of(const Position& p) const {
  std::size_t index = 0;
  for (std::size_t i = n_; i-- > 0;) {
    if (p[i] >= radix_) throw ArgumentError("pile exceeds the oracle's max_pile");
    index = index * radix_ + p[i];
  }
  return index;
}

bool OracleRules::is_terminal(const Position& p) const {
  for (auto v : p) {
    if (v != 0) return false;
  }
  return true;
}

void OracleRules::successors(const Position& x, std::vector<Position>& out) const {
  Position z(n_);
  while (true) {
    std::size_t changed = 0;
    for (std::size_t i = 0; i < n_; ++i) changed += (z[i] != x[i]);
    if (changed >= 1 && changed <= k_) out.push_back(z);
    std::size_t i = n_;
    while (i > 0) {
      --i;
      if (z[i] < x[i]) {
        ++z[i];
        break;
      }
      z[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<OracleRules::Position> OracleRules::successors(const Position& p) const {
  std::vector<Position> out;
  successors(p, out);
  return out;
}

MoorePosition to_position(const SmallPiles& piles, std::size_t k) {
  MoorePosition p;
  p.k = k;
  for (auto v : piles) p.piles.emplace_back(v);
  return p;
}

}  // namespace impartial::moore
