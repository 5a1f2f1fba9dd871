#pragma once

// Command-line front end. run() is separate from main() so that tests can
// drive it with captured streams.
//
// Exit status: 0 success / positive, 1 not positive (or no witness, or sweep
// disagreements), 2 usage or input error, 3 enumeration budget exhausted.

#include "lrpos/lrpos.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lrpos::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::string alpha, beta, gamma, lambda;
  std::optional<std::size_t> rank;
  bool json = false;
  bool dump_lp = false;
  bool integral = false;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string qs = "2,3";
  std::size_t max_size = 3;
  std::size_t max_n = 3;
  unsigned threads = 0;
};

inline std::vector<BigInt> parse_q_list(const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& part : parse_integer_list(text)) {
    if (part < 1) throw Error(ErrorCode::NonpositiveScale, "q=" + part.str() + " must be positive");
    out.push_back(part);
  }
  return out;
}

namespace detail {

inline std::string verdict_text(const Decision& d) {
  if (d.positive) return "positive";
  if (d.route == Route::TrivialReject) return "not positive (trivial: " + d.trivial_reason.value_or("") + ")";
  return "not positive (LP infeasible)";
}

inline void print_point(std::ostream& out, const RationalPoint& pt) {
  for (const auto& [v, x] : pt) out << "  r^" << v.row << "_" << v.letter << " = " << x.str() << '\n';
}

inline void print_filling(std::ostream& out, const Partition& alpha, const LRFilling& f) {
  for (const auto& [v, c] : f.counts) out << "  r^" << v.row << "_" << v.letter << " = " << c.str() << '\n';
  try {
    const auto t = decode_filling(alpha, f, 400);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.offsets[i] == 0 && t.rows[i].empty()) continue;
      out << "  row " << i + 1 << ":";
      for (std::size_t k = 0; k < t.offsets[i]; ++k) out << " .";
      for (auto letter : t.rows[i]) out << ' ' << letter;
      out << '\n';
    }
  } catch (const Error&) {
    // too large to draw
  }
}

inline std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv("LRPOS_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  const std::string text(raw);
  if (!lrpos::detail::is_decimal(text) || text.front() == '-') {
    throw Error(ErrorCode::MalformedInput, "LRPOS_BUDGET='" + text + "' is not a node count");
  }
  return std::stoull(text);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  try {
    if (auto env = detail::budget_from_env()) cfg.budget = *env;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Littlewood-Richardson positivity via the LR polytope"};
  app.require_subcommand(1);

  auto add_rank = [&](CLI::App* sub) { sub->add_option("--rank,-n", cfg.rank, "rank n of GL_n"); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "emit JSON"); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "enumeration node budget (default $LRPOS_BUDGET or 10^7)");
  };
  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("alpha", cfg.alpha, "partition, e.g. 2,1")->required();
    sub->add_option("beta", cfg.beta, "partition")->required();
    sub->add_option("gamma", cfg.gamma, "partition")->required();
  };

  auto* decide = app.add_subcommand("decide", "decide c_{alpha,beta}^gamma > 0 by LP feasibility");
  add_triple(decide);
  add_rank(decide);
  add_json(decide);
  add_budget(decide);
  decide->add_flag("--dump-lp", cfg.dump_lp, "print the constraint system as JSON");
  decide->add_flag("--integral", cfg.integral, "also extract an integral witness by enumeration");

  auto* coeff = app.add_subcommand("coeff", "exact coefficient by LR tableau enumeration");
  add_triple(coeff);
  add_rank(coeff);
  add_json(coeff);
  add_budget(coeff);

  auto* decompose = app.add_subcommand("decompose", "decompose V_alpha (x) V_beta");
  decompose->add_option("alpha", cfg.alpha, "partition")->required();
  decompose->add_option("beta", cfg.beta, "partition")->required();
  add_rank(decompose);
  add_json(decompose);
  add_budget(decompose);

  auto* witness = app.add_subcommand("witness", "integral witness (an LR tableau) or none");
  add_triple(witness);
  add_rank(witness);
  add_json(witness);
  add_budget(witness);

  auto* dim = app.add_subcommand("dim", "dimension of V_lambda for GL_n");
  dim->add_option("lambda", cfg.lambda, "partition")->required();
  dim->add_option("--rank,-n", cfg.rank, "rank n of GL_n")->required();
  add_json(dim);

  auto* probe = app.add_subcommand("probe", "compare verdicts on scaled triples");
  add_triple(probe);
  add_rank(probe);
  add_json(probe);
  add_budget(probe);
  probe->add_option("--q", cfg.qs, "comma-separated scale factors");

  auto* sweep_cmd = app.add_subcommand("sweep", "LP vs enumeration over all small triples");
  sweep_cmd->add_option("--max-size", cfg.max_size, "largest |alpha|, |beta|");
  sweep_cmd->add_option("--max-n", cfg.max_n, "largest height");
  sweep_cmd->add_option("--q", cfg.qs, "comma-separated scale factors");
  sweep_cmd->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  sweep_cmd->add_flag("--integral", cfg.integral, "also validate integral witnesses");
  add_json(sweep_cmd);
  add_budget(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const auto need = [](const std::string& text) { return parse_partition(text); };

    if (decide->parsed()) {
      const auto a = need(cfg.alpha), b = need(cfg.beta), g = need(cfg.gamma);
      auto d = decide_positive(a, b, g, cfg.rank);
      if (cfg.integral && d.positive) attach_integral_witness(d, a, b, g, NodeBudget(cfg.budget));
      if (cfg.json) {
        auto doc = io::encode(d);
        doc["alpha"] = io::encode(a);
        doc["beta"] = io::encode(b);
        doc["gamma"] = io::encode(g);
        if (cfg.dump_lp) doc["lp"] = io::encode(build_lr_system(a, b, g, d.rank));
        out << doc.dump(2) << '\n';
      } else {
        if (cfg.dump_lp) out << io::encode(build_lr_system(a, b, g, d.rank)).dump(2) << '\n';
        out << detail::verdict_text(d) << '\n';
        out << "route: " << route_name(d.route) << "\nrank: " << d.rank << '\n';
        if (d.rational_witness) {
          out << "rational witness:\n";
          detail::print_point(out, *d.rational_witness);
        }
        if (d.integral_witness) {
          out << "integral witness:\n";
          detail::print_filling(out, a, *d.integral_witness);
        }
      }
      return d.positive ? kOk : kNegative;
    }

    if (coeff->parsed()) {
      const auto a = need(cfg.alpha), b = need(cfg.beta), g = need(cfg.gamma);
      const auto n = cfg.rank.value_or(default_rank(a, b, g));
      const auto c = count_lr_tableaux(a, b, g, n, NodeBudget(cfg.budget));
      if (cfg.json) {
        out << io::json{{"alpha", io::encode(a)},
                        {"beta", io::encode(b)},
                        {"gamma", io::encode(g)},
                        {"rank", n},
                        {"coefficient", c.str()}}
                   .dump(2)
            << '\n';
      } else {
        out << c.str() << '\n';
      }
      return kOk;
    }

    if (decompose->parsed()) {
      const auto a = need(cfg.alpha), b = need(cfg.beta);
      const auto n = cfg.rank.value_or(std::max<std::size_t>({1, a.height() + b.height()}));
      const auto d = decompose_tensor(a, b, n, NodeBudget(cfg.budget));
      if (cfg.json) {
        auto doc = io::encode(d);
        doc["alpha"] = io::encode(a);
        doc["beta"] = io::encode(b);
        out << doc.dump(2) << '\n';
      } else {
        for (const auto& [gamma, mult] : d.terms) out << mult.str() << "  " << render(gamma) << '\n';
      }
      return kOk;
    }

    if (witness->parsed()) {
      const auto a = need(cfg.alpha), b = need(cfg.beta), g = need(cfg.gamma);
      const auto n = cfg.rank.value_or(default_rank(a, b, g));
      const auto w = integral_witness(a, b, g, n, NodeBudget(cfg.budget));
      if (cfg.json) {
        out << io::json{{"alpha", io::encode(a)},
                        {"beta", io::encode(b)},
                        {"gamma", io::encode(g)},
                        {"rank", n},
                        {"witness", w ? io::encode(*w) : io::json(nullptr)}}
                   .dump(2)
            << '\n';
      } else if (w) {
        detail::print_filling(out, a, *w);
      } else {
        out << "none\n";
      }
      return w ? kOk : kNegative;
    }

    if (dim->parsed()) {
      const auto l = need(cfg.lambda);
      const auto d = weyl_dimension(l, *cfg.rank);
      if (cfg.json) {
        out << io::json{{"lambda", io::encode(l)}, {"rank", *cfg.rank}, {"dimension", d.str()}}.dump(2) << '\n';
      } else {
        out << d.str() << '\n';
      }
      return kOk;
    }

    if (probe->parsed()) {
      const auto a = need(cfg.alpha), b = need(cfg.beta), g = need(cfg.gamma);
      const auto report = saturation_probe(a, b, g, cfg.rank, parse_q_list(cfg.qs), cfg.budget);
      if (cfg.json) {
        out << io::encode(report).dump(2) << '\n';
      } else {
        for (const auto& e : report.entries) {
          out << "q=" << e.q.str() << ": " << detail::verdict_text(e.decision);
          if (e.oracle_count) out << ", oracle count " << e.oracle_count->str();
          else out << ", oracle over budget";
          out << '\n';
        }
        out << (report.disagreement ? "DISAGREEMENT" : "consistent") << '\n';
      }
      return report.disagreement ? kNegative : kOk;
    }

    if (sweep_cmd->parsed()) {
      SweepOptions opt;
      opt.max_size = cfg.max_size;
      opt.max_n = cfg.max_n;
      opt.qs = parse_q_list(cfg.qs);
      opt.budget = cfg.budget;
      opt.integral_witnesses = cfg.integral;
      opt.threads = cfg.threads;
      const auto report = sweep(opt);
      if (cfg.json) {
        out << io::encode(report).dump(2) << '\n';
      } else {
        out << "instances: " << report.instances << '\n'
            << "lp positive: " << report.lp_positive << '\n'
            << "lp negative: " << report.lp_negative << '\n'
            << "oracle checked: " << report.oracle_checked << '\n'
            << "budget failures: " << report.budget_failures << '\n'
            << "saturation checks: " << report.saturation_checked << '\n'
            << "integral witnesses checked: " << report.integral_checked << '\n'
            << "disagreements: " << report.disagreements.size() << '\n';
        for (const auto& d : report.disagreements) out << io::encode(d).dump() << '\n';
      }
      return report.disagreements.empty() ? kOk : kNegative;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kUsage;
  }
  return kUsage;
}

}  // namespace lrpos::cli
