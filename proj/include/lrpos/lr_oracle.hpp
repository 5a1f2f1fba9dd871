#pragma once

#include "lrpos/error.hpp"
#include "lrpos/lr_polytope.hpp"
#include "lrpos/numeric.hpp"
#include "lrpos/partition.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lrpos {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Cap on backtracking nodes for one call. Exhaustion throws BudgetExceeded.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit = kDefaultNodeBudget) : limit_(limit) {}

  void tick() {
    if (++used_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded, "node budget of " + std::to_string(limit_) + " exhausted");
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Letter counts of a skew tableau: counts[{i, j}] copies of j in row i.
/// Holds every variable of the rank, zeros included.
struct LRFilling {
  Rank rank = 0;
  std::map<VariableIndex, BigInt> counts;

  friend bool operator==(const LRFilling&, const LRFilling&) = default;
};

inline RationalPoint to_point(const LRFilling& filling) {
  RationalPoint pt;
  for (const auto& [v, c] : filling.counts) pt.emplace(v, BigRational(c));
  return pt;
}

/// c_{alpha,beta}^gamma for each gamma, in descending lexicographic order.
struct Decomposition {
  Rank rank = 0;
  std::vector<std::pair<Partition, BigInt>> terms;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

namespace detail {

/// Backtracking over LR skew tableaux of shape gamma/alpha and content beta.
/// Rows top to bottom, letters low to high within a row, and for each letter
/// the number of copies is tried from high to low.
class LrEnumerator {
 public:
  /// Return false from the visitor to stop the enumeration.
  using Visitor = std::function<bool(const LRFilling&)>;

  LrEnumerator(const Partition& alpha, const Partition& beta, const Partition& gamma, Rank n, NodeBudget& budget)
      : n_(n),
        alpha_(alpha.padded(n)),
        beta_(beta.padded(n)),
        gamma_(gamma.padded(n)),
        budget_(budget),
        used_(n + 1, BigInt(0)),
        runs_(n + 1) {}

  void run(Visitor visit) {
    visit_ = std::move(visit);
    stopped_ = false;
    if (n_ == 0) {
      visit_(LRFilling{});
      return;
    }
    above_ = used_;
    fill(1, 1, alpha_[0]);
  }

 private:
  struct Run {
    BigInt start;  // first column, 0-based
    BigInt end;    // one past the last column
    std::size_t letter;
  };

  /// Letter in row i at column col, or 0 when the cell is left of the skew row.
  std::size_t letter_at(std::size_t i, const BigInt& col) const {
    for (const auto& run : runs_[i])
      if (run.start <= col && col < run.end) return run.letter;
    return 0;
  }

  void fill(std::size_t i, std::size_t j, const BigInt& pos) {
    if (stopped_) return;
    budget_.tick();
    if (i > n_) {
      emit();
      return;
    }
    const BigInt& row_end = gamma_[i - 1];
    if (j > n_) {
      if (pos != row_end) return;
      const auto saved_above = above_;
      above_ = used_;
      fill(i + 1, 1, i < n_ ? alpha_[i] : BigInt(0));
      above_ = saved_above;
      return;
    }

    const BigInt remaining = row_end - pos;
    BigInt max_count = std::min(remaining, BigInt(beta_[j - 1] - used_[j]));
    // Reverse reading of row i meets all of its j's before any of its
    // (j-1)'s, so the j's must not overtake the (j-1)'s of the rows above.
    if (j >= 2) max_count = std::min(max_count, BigInt(above_[j - 1] - above_[j]));
    if (max_count < 0) return;
    BigInt min_count = 0;
    if (j == n_) {
      if (remaining > max_count) return;
      min_count = remaining;
    }

    for (BigInt c = max_count; c >= min_count; --c) {
      if (stopped_) return;
      if (c > 0 && i >= 2) {
        // Rows increase weakly, so the rightmost new cell sees the largest
        // letter above it; columns must increase strictly downward.
        const BigInt last = pos + c - 1;
        const auto above_letter = last < alpha_[i - 2] ? 0 : letter_at(i - 1, last);
        if (last >= alpha_[i - 2] && above_letter >= j) continue;
      }
      if (c > 0) runs_[i].push_back({pos, pos + c, j});
      used_[j] += c;
      fill(i, j + 1, pos + c);
      used_[j] -= c;
      if (c > 0) runs_[i].pop_back();
    }
  }

  void emit() {
    LRFilling filling{n_, {}};
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = 1; j <= i; ++j) filling.counts[{i, j}] = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
      for (const auto& run : runs_[i]) {
        // The lattice condition keeps letters <= row index.
        if (run.letter > i) throw std::logic_error("LR filling has letter above its row index");
        filling.counts[{i, run.letter}] += run.end - run.start;
      }
    }
    if (!visit_(filling)) stopped_ = true;
  }

  Rank n_;
  std::vector<BigInt> alpha_, beta_, gamma_;
  NodeBudget& budget_;
  std::vector<BigInt> used_;   // letter totals so far, 1-based
  std::vector<BigInt> above_;  // letter totals over completed rows
  std::vector<std::vector<Run>> runs_;
  Visitor visit_;
  bool stopped_ = false;
};

inline void require_heights(const Partition& p, Rank n) { (void)p.padded(n); }

}  // namespace detail

/// c_{alpha,beta}^gamma by exhaustive enumeration of LR skew tableaux.
inline BigInt count_lr_tableaux(const Partition& alpha, const Partition& beta, const Partition& gamma, Rank n,
                                NodeBudget budget = NodeBudget{}) {
  detail::require_heights(alpha, n);
  detail::require_heights(beta, n);
  detail::require_heights(gamma, n);
  if (!check_trivial_necessary(alpha, beta, gamma)) return 0;
  BigInt count = 0;
  detail::LrEnumerator(alpha, beta, gamma, n, budget).run([&](const LRFilling&) {
    ++count;
    return true;
  });
  return count;
}

/// All LR fillings in enumeration order; intended for small shapes.
inline std::vector<LRFilling> all_lr_fillings(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                              Rank n, NodeBudget budget = NodeBudget{}) {
  detail::require_heights(alpha, n);
  detail::require_heights(beta, n);
  detail::require_heights(gamma, n);
  std::vector<LRFilling> out;
  if (!check_trivial_necessary(alpha, beta, gamma)) return out;
  detail::LrEnumerator(alpha, beta, gamma, n, budget).run([&](const LRFilling& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

/// First LR filling in enumeration order, i.e. an integer point of the LR
/// polytope, or nullopt when the coefficient is zero.
inline std::optional<LRFilling> integral_witness(const Partition& alpha, const Partition& beta,
                                                 const Partition& gamma, Rank n,
                                                 NodeBudget budget = NodeBudget{}) {
  detail::require_heights(alpha, n);
  detail::require_heights(beta, n);
  detail::require_heights(gamma, n);
  if (!check_trivial_necessary(alpha, beta, gamma)) return std::nullopt;
  std::optional<LRFilling> found;
  detail::LrEnumerator(alpha, beta, gamma, n, budget).run([&](const LRFilling& f) {
    found = f;
    return false;
  });
  return found;
}

/// V_alpha (x) V_beta for GL_n as multiplicities over all gamma of the right
/// size with height <= n. One budget covers the whole call.
inline Decomposition decompose_tensor(const Partition& alpha, const Partition& beta, Rank n,
                                      NodeBudget budget = NodeBudget{}) {
  detail::require_heights(alpha, n);
  detail::require_heights(beta, n);
  const BigInt total = size(alpha) + size(beta);
  if (total > BigInt(budget.limit())) {
    throw Error(ErrorCode::BudgetExceeded, "size " + total.str() + " is beyond the enumeration budget");
  }
  Decomposition out{n, {}};
  for (auto& gamma : partitions_of(total.convert_to<std::size_t>(), n)) {
    if (!check_trivial_necessary(alpha, beta, gamma)) continue;
    BigInt count = 0;
    detail::LrEnumerator(alpha, beta, gamma, n, budget).run([&](const LRFilling&) {
      ++count;
      return true;
    });
    if (count > 0) out.terms.emplace_back(std::move(gamma), std::move(count));
  }
  return out;
}

/// Number of semistandard tableaux of shape lambda with entries in [1, n].
inline BigInt count_ssyt(const Partition& lambda, Rank n, NodeBudget budget = NodeBudget{}) {
  detail::require_heights(lambda, n);
  const BigInt cells = size(lambda);
  if (cells > BigInt(budget.limit())) {
    throw Error(ErrorCode::BudgetExceeded, "shape of size " + cells.str() + " is beyond the enumeration budget");
  }
  std::vector<std::size_t> shape;
  for (const auto& p : lambda.parts()) shape.push_back(p.convert_to<std::size_t>());
  std::vector<std::vector<std::size_t>> grid;
  for (auto len : shape) grid.emplace_back(len, 0);

  BigInt count = 0;
  auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    budget.tick();
    if (r == shape.size()) {
      ++count;
      return;
    }
    if (c == shape[r]) {
      self(self, r + 1, 0);
      return;
    }
    std::size_t lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    // Column c still needs room for the cells below it.
    std::size_t below = 0;
    for (std::size_t k = r + 1; k < shape.size() && shape[k] > c; ++k) ++below;
    for (std::size_t v = lo; v + below <= n; ++v) {
      grid[r][c] = v;
      self(self, r, c + 1);
    }
    grid[r][c] = 0;
  };
  rec(rec, 0, 0);
  return count;
}

/// Sum over the decomposition of mult * dim V_gamma, to compare with
/// dim V_alpha * dim V_beta.
inline bool dimension_identity_holds(const Decomposition& d, const Partition& alpha, const Partition& beta) {
  BigInt lhs = 0;
  for (const auto& [gamma, mult] : d.terms) lhs += mult * weyl_dimension(gamma, d.rank);
  return lhs == weyl_dimension(alpha, d.rank) * weyl_dimension(beta, d.rank);
}

// ---------------------------------------------------------------------------
// Word-level validation. Works on explicit cells and letters only, and does
// not consult the constraint system.

/// Explicit skew tableau: rows[i] lists the letters of skew row i+1 left to
/// right; offsets[i] is the number of empty cells before them.
struct SkewTableau {
  std::vector<std::size_t> offsets;
  std::vector<std::vector<std::size_t>> rows;
};

/// Materializes the filling over gamma/alpha. Throws BudgetExceeded when the
/// skew shape has more than max_cells cells.
inline SkewTableau decode_filling(const Partition& alpha, const LRFilling& filling,
                                  std::size_t max_cells = 1'000'000) {
  SkewTableau t;
  BigInt total = 0;
  for (const auto& [v, c] : filling.counts) total += c;
  if (total > BigInt(max_cells) || size(alpha) > BigInt(max_cells)) {
    throw Error(ErrorCode::BudgetExceeded, "filling too large to materialize");
  }
  const auto a = alpha.padded(filling.rank);
  t.offsets.resize(filling.rank);
  t.rows.resize(filling.rank);
  for (std::size_t i = 0; i < filling.rank; ++i) t.offsets[i] = a[i].convert_to<std::size_t>();
  for (const auto& [v, c] : filling.counts) {
    auto& row = t.rows[v.row - 1];
    row.insert(row.end(), c.convert_to<std::size_t>(), v.letter);
  }
  for (auto& row : t.rows) std::sort(row.begin(), row.end());
  return t;
}

/// Entries read bottom row to top row, left to right within each row.
inline std::vector<std::size_t> row_word(const SkewTableau& t) {
  std::vector<std::size_t> word;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

/// Every suffix has at least as many k's as (k+1)'s, for every k.
inline bool is_reverse_lattice_word(const std::vector<std::size_t>& word) {
  std::map<std::size_t, std::size_t> seen;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto letter = *it;
    if (letter == 0) return false;
    ++seen[letter];
    if (letter >= 2 && seen[letter] > seen[letter - 1]) return false;
  }
  return true;
}

struct FillingCheck {
  bool shape = false;
  bool content = false;
  bool rows_weak = false;
  bool columns_strict = false;
  bool lattice = false;

  bool ok() const noexcept { return shape && content && rows_weak && columns_strict && lattice; }
};

/// Checks that the filling is an LR skew tableau of shape gamma/alpha with
/// content beta, cell by cell.
inline FillingCheck validate_filling(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                     const LRFilling& filling) {
  FillingCheck check;
  const Rank n = filling.rank;
  const auto t = decode_filling(alpha, filling);
  const auto g = gamma.padded(n);
  const auto b = beta.padded(n);

  check.shape = true;
  for (std::size_t i = 0; i < n; ++i)
    if (BigInt(t.offsets[i] + t.rows[i].size()) != g[i]) check.shape = false;

  std::map<std::size_t, std::size_t> content;
  for (const auto& row : t.rows)
    for (auto letter : row) ++content[letter];
  check.content = true;
  for (const auto& [letter, cnt] : content)
    if (letter < 1 || letter > n || BigInt(cnt) != b[letter - 1]) check.content = false;
  for (std::size_t j = 1; j <= n; ++j)
    if (!content.contains(j) && b[j - 1] != 0) check.content = false;

  check.rows_weak = true;
  for (const auto& row : t.rows)
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row[k - 1] > row[k]) check.rows_weak = false;

  check.columns_strict = true;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
      const std::size_t col = t.offsets[i] + k;
      if (col < t.offsets[i - 1]) continue;
      const std::size_t up = col - t.offsets[i - 1];
      if (up >= t.rows[i - 1].size() || t.rows[i - 1][up] >= t.rows[i][k]) check.columns_strict = false;
    }
  }

  check.lattice = is_reverse_lattice_word(row_word(t));
  return check;
}

}  // namespace lrpos
