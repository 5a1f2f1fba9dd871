#pragma once

#include "lrpos/error.hpp"
#include "lrpos/lr_oracle.hpp"
#include "lrpos/lr_polytope.hpp"
#include "lrpos/partition.hpp"
#include "lrpos/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace lrpos {

// Throughout, c_{alpha,beta}^gamma and c_{alpha,beta,gamma} denote the same
// number: the multiplicity of V_gamma in V_alpha (x) V_beta.

enum class Route { TrivialReject, LPFeasible, LPInfeasible };

constexpr std::string_view route_name(Route r) {
  switch (r) {
    case Route::TrivialReject: return "TrivialReject";
    case Route::LPFeasible: return "LPFeasible";
    case Route::LPInfeasible: return "LPInfeasible";
  }
  return "?";
}

inline std::optional<Route> route_from_name(std::string_view name) {
  for (auto r : {Route::TrivialReject, Route::LPFeasible, Route::LPInfeasible})
    if (route_name(r) == name) return r;
  return std::nullopt;
}

struct Decision {
  bool positive = false;
  Route route = Route::TrivialReject;
  Rank rank = 0;
  std::optional<std::string> trivial_reason;
  std::optional<RationalPoint> rational_witness;  // iff route == LPFeasible
  std::optional<LRFilling> integral_witness;      // only via attach_integral_witness
  std::size_t pivot_count = 0;
  std::chrono::microseconds elapsed{0};
};

/// Smallest rank that fits all three partitions (at least 1).
inline Rank default_rank(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  return std::max<Rank>({1, alpha.height(), beta.height(), gamma.height()});
}

/// Decides c_{alpha,beta}^gamma > 0 via LP feasibility of the LR polytope.
/// A nonempty polytope has an integer point by saturation, so Feasible means
/// positive. Never enumerates tableaux.
inline Decision decide_positive(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                std::optional<Rank> rank = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  Decision d;
  d.rank = rank.value_or(default_rank(alpha, beta, gamma));
  for (const auto* p : {&alpha, &beta, &gamma}) (void)p->padded(d.rank);

  if (auto reason = trivial_obstruction(alpha, beta, gamma)) {
    d.route = Route::TrivialReject;
    d.trivial_reason = std::move(reason);
  } else {
    const auto sys = build_lr_system(alpha, beta, gamma, d.rank);
    auto result = feasible(sys);
    d.pivot_count = result.pivot_count;
    if (result.feasible()) {
      if (!evaluate_point(sys, *result.witness).satisfied) {
        throw std::logic_error("simplex witness does not satisfy the LR system");
      }
      d.route = Route::LPFeasible;
      d.positive = true;
      d.rational_witness = std::move(result.witness);
    } else {
      d.route = Route::LPInfeasible;
    }
  }
  d.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return d;
}

/// Opt-in integral proof: fills d.integral_witness from the enumerator.
inline void attach_integral_witness(Decision& d, const Partition& alpha, const Partition& beta,
                                    const Partition& gamma, NodeBudget budget = NodeBudget{}) {
  d.integral_witness = integral_witness(alpha, beta, gamma, d.rank, budget);
}

struct ProbeEntry {
  BigInt q;
  Decision decision;
  std::optional<BigInt> oracle_count;  // absent when the budget ran out
  std::optional<std::string> oracle_error;
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;  // q = 1 first
  bool disagreement = false;        // verdicts differ across q or with the oracle
};

/// Decides the scaled triples (q alpha, q beta, q gamma) for q = 1 and each q
/// in qs, and counts tableaux where the budget allows.
inline ProbeReport saturation_probe(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                    std::optional<Rank> rank, const std::vector<BigInt>& qs,
                                    std::uint64_t budget = kDefaultNodeBudget) {
  ProbeReport report;
  std::vector<BigInt> all{BigInt(1)};
  for (const auto& q : qs)
    if (q != 1) all.push_back(q);
  for (const auto& q : all) {
    const auto a = scale(alpha, q), b = scale(beta, q), g = scale(gamma, q);
    ProbeEntry entry{q, decide_positive(a, b, g, rank), std::nullopt, std::nullopt};
    try {
      entry.oracle_count = count_lr_tableaux(a, b, g, entry.decision.rank, NodeBudget(budget));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      entry.oracle_error = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  const bool base = report.entries.front().decision.positive;
  for (const auto& e : report.entries) {
    if (e.decision.positive != base) report.disagreement = true;
    if (e.oracle_count && (*e.oracle_count > 0) != e.decision.positive) report.disagreement = true;
  }
  return report;
}

struct SweepOptions {
  std::size_t max_size = 0;
  std::size_t max_n = 1;
  std::vector<BigInt> qs;
  std::uint64_t budget = kDefaultNodeBudget;
  bool integral_witnesses = false;  // also extract and validate integer points
  unsigned threads = 0;             // 0: hardware concurrency
};

/// A triple on which two routes that must agree did not.
struct Disagreement {
  std::string kind;  // "oracle", "saturation", "trivial", "witness", "integral"
  Partition alpha, beta, gamma;
  Rank rank = 0;
  BigInt q = 1;
  std::string detail;

  friend bool operator==(const Disagreement&, const Disagreement&) = default;
};

struct SweepReport {
  std::uint64_t instances = 0;
  std::uint64_t lp_positive = 0;
  std::uint64_t lp_negative = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t budget_failures = 0;
  std::uint64_t saturation_checked = 0;
  std::uint64_t witnesses_checked = 0;
  std::uint64_t integral_checked = 0;
  std::vector<Disagreement> disagreements;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

struct Triple {
  Partition alpha, beta, gamma;
};

/// All (alpha, beta, gamma) with |alpha|, |beta| <= max_size,
/// |gamma| = |alpha| + |beta| and every height <= max_n.
inline std::vector<Triple> sweep_triples(std::size_t max_size, std::size_t max_n) {
  std::vector<Triple> out;
  const auto small = partitions_up_to(max_size, max_n);
  for (const auto& a : small) {
    for (const auto& b : small) {
      const auto total = (size(a) + size(b)).convert_to<std::size_t>();
      for (auto& g : partitions_of(total, max_n)) out.push_back({a, b, std::move(g)});
    }
  }
  return out;
}

namespace detail {

inline void sweep_one(const Triple& t, const SweepOptions& opt, SweepReport& rep,
                      std::vector<std::pair<std::size_t, Disagreement>>& found, std::size_t index) {
  const auto& [a, b, g] = t;
  auto flag = [&](std::string kind, Rank n, BigInt q, std::string detail) {
    found.push_back({index, Disagreement{std::move(kind), a, b, g, n, std::move(q), std::move(detail)}});
  };

  const auto d = decide_positive(a, b, g);
  ++rep.instances;
  ++(d.positive ? rep.lp_positive : rep.lp_negative);

  if (d.rational_witness) {
    ++rep.witnesses_checked;
    const auto sys = build_lr_system(a, b, g, d.rank);
    if (!evaluate_point(sys, *d.rational_witness).satisfied) flag("witness", d.rank, 1, "rational witness rejected");
  }
  if (d.route == Route::TrivialReject && feasible(build_lr_system(a, b, g, d.rank)).feasible()) {
    flag("trivial", d.rank, 1, "trivially rejected triple has a feasible LP");
  }

  try {
    const auto count = count_lr_tableaux(a, b, g, d.rank, NodeBudget(opt.budget));
    ++rep.oracle_checked;
    if ((count > 0) != d.positive) {
      flag("oracle", d.rank, 1, "lp " + std::string(d.positive ? "positive" : "not positive") + ", oracle count " +
                                    count.str());
    }
    if (opt.integral_witnesses && count > 0) {
      const auto w = integral_witness(a, b, g, d.rank, NodeBudget(opt.budget));
      ++rep.integral_checked;
      if (!w || !validate_filling(a, b, g, *w).ok() ||
          !evaluate_point(build_lr_system(a, b, g, d.rank), to_point(*w)).satisfied) {
        flag("integral", d.rank, 1, "integral witness missing or invalid");
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    ++rep.budget_failures;
  }

  for (const auto& q : opt.qs) {
    const auto dq = decide_positive(scale(a, q), scale(b, q), scale(g, q), d.rank);
    ++rep.saturation_checked;
    if (dq.positive != d.positive) {
      flag("saturation", d.rank, q, std::string("q=1 ") + (d.positive ? "positive" : "not positive") + ", scaled " +
                                        (dq.positive ? "positive" : "not positive"));
    }
  }
}

}  // namespace detail

/// Cross-checks the LP route against the enumerator and against scaling on
/// every triple of sweep_triples(max_size, max_n). Triples are processed in
/// parallel; the report is independent of the thread count.
inline SweepReport sweep(const SweepOptions& opt) {
  const auto triples = sweep_triples(opt.max_size, opt.max_n);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opt.threads ? opt.threads : std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(std::max<std::size_t>(1, triples.size()))));

  SweepReport total;
  std::vector<std::pair<std::size_t, Disagreement>> found;
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::exception_ptr failure;

  auto work = [&] {
    SweepReport local;
    std::vector<std::pair<std::size_t, Disagreement>> local_found;
    try {
      for (std::size_t k = next++; k < triples.size(); k = next++) detail::sweep_one(triples[k], opt, local, local_found, k);
    } catch (...) {
      std::lock_guard lock(merge);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard lock(merge);
    total.instances += local.instances;
    total.lp_positive += local.lp_positive;
    total.lp_negative += local.lp_negative;
    total.oracle_checked += local.oracle_checked;
    total.budget_failures += local.budget_failures;
    total.saturation_checked += local.saturation_checked;
    total.witnesses_checked += local.witnesses_checked;
    total.integral_checked += local.integral_checked;
    found.insert(found.end(), local_found.begin(), local_found.end());
  };

  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, d] : found) total.disagreements.push_back(std::move(d));
  return total;
}

}  // namespace lrpos
