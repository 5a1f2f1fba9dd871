#pragma once

#include "lrpos/error.hpp"
#include "lrpos/numeric.hpp"
#include "lrpos/partition.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lrpos {

/// The variable r^row_letter: how many copies of `letter` sit in skew row
/// `row`. Both are 1-based and letter <= row always holds; variables with
/// letter > row are identically zero in any LR filling and are not modelled.
struct VariableIndex {
  std::size_t row = 0;
  std::size_t letter = 0;

  friend auto operator<=>(const VariableIndex&, const VariableIndex&) = default;
};

/// "i.j", the key format used for witness maps.
inline std::string to_string(const VariableIndex& v) {
  return std::to_string(v.row) + "." + std::to_string(v.letter);
}

/// Number of variables for rank n: n(n+1)/2.
constexpr std::size_t num_variables(Rank n) { return n * (n + 1) / 2; }

/// Position of r^row_letter in the canonical order (1,1),(2,1),(2,2),(3,1),...
constexpr std::size_t variable_position(std::size_t row, std::size_t letter) {
  return row * (row - 1) / 2 + (letter - 1);
}

inline std::vector<VariableIndex> variables_for_rank(Rank n) {
  std::vector<VariableIndex> vars;
  vars.reserve(num_variables(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) vars.push_back({i, j});
  return vars;
}

enum class Family { Shape, Content, Tableau, Lattice };

constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::Shape: return "shape";
    case Family::Content: return "content";
    case Family::Tableau: return "tableau";
    case Family::Lattice: return "lattice";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (auto f : {Family::Shape, Family::Content, Family::Tableau, Family::Lattice})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

struct Term {
  std::size_t var = 0;  // position in ConstraintSystem::vars
  int coeff = 0;        // always +1 or -1

  friend bool operator==(const Term&, const Term&) = default;
};

/// One row `sum(terms) (= or <=) rhs`. (i, j) records which member of its
/// family the row is; shape rows use j = 0 and content rows use i = 0.
struct ConstraintRow {
  std::vector<Term> terms;  // sorted by var, no repeats
  BigInt rhs;
  Family family = Family::Shape;
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const ConstraintRow&, const ConstraintRow&) = default;
};

/// Equalities and <= inequalities over nonnegative variables. Nonnegativity
/// is implicit and never materialized as rows.
struct ConstraintSystem {
  Rank rank = 0;
  std::vector<VariableIndex> vars;
  std::vector<ConstraintRow> eq;
  std::vector<ConstraintRow> le;

  std::size_t num_vars() const noexcept { return vars.size(); }

  friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) = default;
};

/// A rational point keyed by variable.
using RationalPoint = std::map<VariableIndex, BigRational>;

/// Reason the cheap necessary conditions fail, if they do.
inline std::optional<std::string> trivial_obstruction(const Partition& alpha, const Partition& beta,
                                                      const Partition& gamma) {
  if (size(alpha) + size(beta) != size(gamma)) return "size mismatch";
  if (!contains(gamma, alpha)) return "alpha not contained in gamma";
  if (gamma.height() > alpha.height() + beta.height()) return "height of gamma exceeds combined heights";
  return std::nullopt;
}

/// False certifies a zero coefficient; true is inconclusive.
inline bool check_trivial_necessary(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  return !trivial_obstruction(alpha, beta, gamma).has_value();
}

namespace detail {

/// Appends a row, dropping it only when it has no terms and is trivially
/// satisfied. Unsatisfiable constant rows are kept as infeasibility witnesses.
inline void push_row(std::vector<ConstraintRow>& rows, ConstraintRow row, bool equality) {
  if (row.terms.empty()) {
    const bool holds = equality ? row.rhs == 0 : row.rhs >= 0;
    if (holds) return;
  }
  std::sort(row.terms.begin(), row.terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  rows.push_back(std::move(row));
}

}  // namespace detail

/// Builds the LR polytope for shape gamma/alpha and content beta in rank n.
/// Integer points are exactly the count vectors of LR skew tableaux.
///
/// Rows, in order:
///   shape    (i):   sum_j r^i_j = gamma_i - alpha_i
///   content  (j):   sum_i r^i_j = beta_j
///   tableau  (i,j): sum_{k<=j} r^{i+1}_k - sum_{k<j} r^i_k <= alpha_i - alpha_{i+1}
///   lattice  (i,j): sum_{i'<=i} r^{i'}_j - sum_{i'<i} r^{i'}_{j-1} <= 0,  j >= 2
/// with terms on eliminated variables (letter > row) dropped.
inline ConstraintSystem build_lr_system(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                        Rank n) {
  const auto a = alpha.padded(n);
  const auto b = beta.padded(n);
  const auto g = gamma.padded(n);

  ConstraintSystem sys;
  sys.rank = n;
  sys.vars = variables_for_rank(n);

  auto var = [](std::size_t row, std::size_t letter) { return variable_position(row, letter); };

  for (std::size_t i = 1; i <= n; ++i) {
    ConstraintRow row{.terms = {}, .rhs = g[i - 1] - a[i - 1], .family = Family::Shape, .i = i, .j = 0};
    for (std::size_t j = 1; j <= i; ++j) row.terms.push_back({var(i, j), +1});
    detail::push_row(sys.eq, std::move(row), true);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    ConstraintRow row{.terms = {}, .rhs = b[j - 1], .family = Family::Content, .i = 0, .j = j};
    for (std::size_t i = j; i <= n; ++i) row.terms.push_back({var(i, j), +1});
    detail::push_row(sys.eq, std::move(row), true);
  }
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      ConstraintRow row{.terms = {}, .rhs = a[i - 1] - a[i], .family = Family::Tableau, .i = i, .j = j};
      for (std::size_t k = 1; k <= j && k <= i + 1; ++k) row.terms.push_back({var(i + 1, k), +1});
      for (std::size_t k = 1; k < j && k <= i; ++k) row.terms.push_back({var(i, k), -1});
      detail::push_row(sys.le, std::move(row), false);
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 2; j <= n; ++j) {
      ConstraintRow row{.terms = {}, .rhs = 0, .family = Family::Lattice, .i = i, .j = j};
      for (std::size_t r = j; r <= i; ++r) row.terms.push_back({var(r, j), +1});
      for (std::size_t r = j - 1; r < i; ++r) row.terms.push_back({var(r, j - 1), -1});
      detail::push_row(sys.le, std::move(row), false);
    }
  }
  return sys;
}

struct RowResidual {
  Family family = Family::Shape;
  std::size_t i = 0;
  std::size_t j = 0;
  BigRational residual;  // lhs - rhs
  bool holds = true;
};

struct SatisfactionReport {
  bool satisfied = true;
  std::vector<RowResidual> eq;
  std::vector<RowResidual> le;
  std::vector<VariableIndex> negative;  // coordinates below zero
};

/// Exact check of a point against every row and against nonnegativity.
inline SatisfactionReport evaluate_point(const ConstraintSystem& sys, const RationalPoint& pt) {
  if (pt.size() != sys.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(pt.size()) +
                                                  " coordinates, system has " +
                                                  std::to_string(sys.num_vars()) + " variables");
  }
  std::vector<BigRational> x;
  x.reserve(sys.num_vars());
  for (const auto& v : sys.vars) {
    const auto it = pt.find(v);
    if (it == pt.end()) throw Error(ErrorCode::DimensionMismatch, "point lacks variable " + to_string(v));
    x.push_back(it->second);
  }

  SatisfactionReport report;
  auto residual = [&](const ConstraintRow& row) {
    BigRational lhs = 0;
    for (const auto& t : row.terms) {
      if (t.coeff > 0) lhs += x[t.var];
      else lhs -= x[t.var];
    }
    return lhs - BigRational(row.rhs);
  };
  for (const auto& row : sys.eq) {
    auto r = residual(row);
    const bool holds = r == 0;
    report.satisfied = report.satisfied && holds;
    report.eq.push_back({row.family, row.i, row.j, std::move(r), holds});
  }
  for (const auto& row : sys.le) {
    auto r = residual(row);
    const bool holds = r <= 0;
    report.satisfied = report.satisfied && holds;
    report.le.push_back({row.family, row.i, row.j, std::move(r), holds});
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < 0) {
      report.negative.push_back(sys.vars[k]);
      report.satisfied = false;
    }
  }
  return report;
}

}  // namespace lrpos
