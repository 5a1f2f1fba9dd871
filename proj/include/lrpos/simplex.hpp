#pragma once

#include "lrpos/lr_polytope.hpp"
#include "lrpos/numeric.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lrpos {

enum class Verdict { Feasible, Infeasible };

struct FeasibilityResult {
  Verdict verdict = Verdict::Infeasible;
  std::optional<RationalPoint> witness;  // present iff Feasible
  std::size_t pivot_count = 0;
  /// Optimal phase-1 objective (sum of artificials). Zero iff Feasible; a
  /// strictly positive value is the infeasibility certificate.
  BigRational phase1_objective;

  bool feasible() const noexcept { return verdict == Verdict::Feasible; }
};

namespace detail {

/// Dense phase-1 tableau over exact rationals.
///
/// Columns are ordered: structural variables, one slack per <= row, then
/// artificials. Rows whose rhs is negative are negated first so every basic
/// value starts nonnegative. A <= row with rhs >= 0 starts with its slack
/// basic; every other row gets an artificial.
class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const ConstraintSystem& sys) : num_structural_(sys.num_vars()) {
    const std::size_t num_slack = sys.le.size();
    const std::size_t m = sys.eq.size() + sys.le.size();

    std::size_t num_art = sys.eq.size();
    for (const auto& row : sys.le)
      if (row.rhs < 0) ++num_art;
    num_cols_ = num_structural_ + num_slack + num_art;
    first_artificial_ = num_structural_ + num_slack;

    rows_.assign(m, std::vector<BigRational>(num_cols_));
    rhs_.resize(m);
    basis_.resize(m);

    std::size_t next_art = first_artificial_;
    std::size_t r = 0;
    auto load = [&](const ConstraintRow& row, std::optional<std::size_t> slack) {
      const bool negate = row.rhs < 0;
      const int sign = negate ? -1 : 1;
      for (const auto& t : row.terms) rows_[r][t.var] = sign * t.coeff;
      rhs_[r] = BigRational(negate ? BigInt(-row.rhs) : row.rhs);
      if (slack) rows_[r][*slack] = sign;
      if (slack && !negate) {
        basis_[r] = *slack;
      } else {
        rows_[r][next_art] = 1;
        basis_[r] = next_art++;
      }
      ++r;
    };
    for (const auto& row : sys.eq) load(row, std::nullopt);
    for (std::size_t k = 0; k < sys.le.size(); ++k) load(sys.le[k], num_structural_ + k);

    // Reduced costs of the phase-1 objective sum(artificials).
    reduced_.assign(num_cols_, BigRational(0));
    for (std::size_t c = first_artificial_; c < num_cols_; ++c) reduced_[c] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t c = 0; c < num_cols_; ++c)
        if (!is_zero(rows_[i][c])) reduced_[c] -= rows_[i][c];
    }
  }

  /// Runs Bland's rule to optimality; returns the number of pivots.
  std::size_t solve() {
    std::size_t pivots = 0;
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < num_cols_; ++c) {
        if (reduced_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return pivots;

      std::optional<std::size_t> leaving;
      BigRational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& a = rows_[i][*entering];
        if (a <= 0) continue;
        BigRational ratio = rhs_[i] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase 1 is bounded below by zero, so an improving column always has
      // a blocking row.
      if (!leaving) throw std::logic_error("phase-1 simplex reported unbounded");
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

  BigRational objective() const {
    BigRational w = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (is_artificial(basis_[i])) w += rhs_[i];
    return w;
  }

  /// Values of the structural variables at the current basis.
  std::vector<BigRational> structural_values() const {
    std::vector<BigRational> x(num_structural_, BigRational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < num_structural_) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  static bool is_zero(const BigRational& v) { return v.is_zero(); }
  bool is_artificial(std::size_t col) const { return col >= first_artificial_; }

  void pivot(std::size_t r, std::size_t e) {
    auto& prow = rows_[r];
    const BigRational inv = 1 / prow[e];
    for (auto& v : prow)
      if (!is_zero(v)) v *= inv;
    rhs_[r] *= inv;

    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || is_zero(rows_[i][e])) continue;
      const BigRational f = rows_[i][e];
      for (std::size_t c = 0; c < num_cols_; ++c)
        if (!is_zero(prow[c])) rows_[i][c] -= f * prow[c];
      rhs_[i] -= f * rhs_[r];
    }
    if (!is_zero(reduced_[e])) {
      const BigRational f = reduced_[e];
      for (std::size_t c = 0; c < num_cols_; ++c)
        if (!is_zero(prow[c])) reduced_[c] -= f * prow[c];
    }
    basis_[r] = e;
  }

  std::size_t num_structural_ = 0;
  std::size_t num_cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<BigRational>> rows_;
  std::vector<BigRational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<BigRational> reduced_;
};

}  // namespace detail

/// Decides whether sys has a nonnegative rational solution, by phase-1
/// simplex with Bland's rule in exact arithmetic. Deterministic: the same
/// system always yields the same pivots and the same witness.
inline FeasibilityResult feasible(const ConstraintSystem& sys) {
  detail::PhaseOneTableau tableau(sys);
  FeasibilityResult result;
  result.pivot_count = tableau.solve();
  result.phase1_objective = tableau.objective();
  if (result.phase1_objective != 0) {
    result.verdict = Verdict::Infeasible;
    return result;
  }
  result.verdict = Verdict::Feasible;
  const auto x = tableau.structural_values();
  RationalPoint witness;
  for (std::size_t k = 0; k < x.size(); ++k) witness.emplace(sys.vars[k], x[k]);
  result.witness = std::move(witness);
  return result;
}

}  // namespace lrpos
