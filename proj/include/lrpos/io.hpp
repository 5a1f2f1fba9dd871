#pragma once

// JSON encodings. Every integer or rational that can grow with the input is
// written as a decimal string so that no precision is lost.

#include "lrpos/error.hpp"
#include "lrpos/lr_oracle.hpp"
#include "lrpos/lr_polytope.hpp"
#include "lrpos/partition.hpp"
#include "lrpos/saturation.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>

namespace lrpos::io {

using json = nlohmann::json;

namespace detail {

inline std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw Error(ErrorCode::MalformedInput, "expected a decimal string, got " + j.dump());
}

inline VariableIndex parse_key(const std::string& key) {
  const auto dot = key.find('.');
  if (dot == std::string::npos) throw Error(ErrorCode::MalformedInput, "bad variable key '" + key + "'");
  try {
    return {std::stoul(key.substr(0, dot)), std::stoul(key.substr(dot + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "bad variable key '" + key + "'");
  }
}

}  // namespace detail

// Partition: ["4","2","2","1"]

inline json encode(const Partition& p) {
  json out = json::array();
  for (const auto& part : p.parts()) out.push_back(part.str());
  return out;
}

inline Partition decode_partition(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedInput, "partition must be a JSON array");
  std::vector<BigInt> parts;
  for (const auto& e : j) {
    const auto text = detail::scalar_text(e);
    if (!lrpos::detail::is_decimal(text)) throw Error(ErrorCode::MalformedInput, "'" + text + "' is not an integer");
    parts.emplace_back(text);
  }
  return Partition(std::move(parts));
}

// Rational point / witness map: {"i.j": "p/q"}

inline json encode(const RationalPoint& pt) {
  json out = json::object();
  for (const auto& [v, x] : pt) out[to_string(v)] = x.str();
  return out;
}

inline RationalPoint decode_point(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "point must be a JSON object");
  RationalPoint pt;
  for (const auto& [key, value] : j.items()) pt.emplace(detail::parse_key(key), parse_rational(detail::scalar_text(value)));
  return pt;
}

// LRFilling: {"i.j": "count"} over every variable of its rank.

inline json encode(const LRFilling& f) {
  json out = json::object();
  for (const auto& [v, c] : f.counts) out[to_string(v)] = c.str();
  return out;
}

inline LRFilling decode_filling(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "filling must be a JSON object");
  LRFilling f;
  for (const auto& [key, value] : j.items()) {
    const auto v = detail::parse_key(key);
    f.counts[v] = parse_integer(detail::scalar_text(value));
    f.rank = std::max(f.rank, v.row);
  }
  return f;
}

// ConstraintSystem:
// {num_vars, rank, vars:[{i,j}], eq:[{coeffs:{"k":±1}, rhs, family, i, j}], le:[...]}

namespace detail {

inline json encode_rows(const std::vector<ConstraintRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json coeffs = json::object();
    for (const auto& t : row.terms) coeffs[std::to_string(t.var)] = t.coeff;
    out.push_back({{"coeffs", coeffs},
                   {"rhs", row.rhs.str()},
                   {"family", std::string(family_name(row.family))},
                   {"i", row.i},
                   {"j", row.j}});
  }
  return out;
}

inline std::vector<ConstraintRow> decode_rows(const json& j) {
  std::vector<ConstraintRow> rows;
  for (const auto& r : j) {
    ConstraintRow row;
    for (const auto& [key, value] : r.at("coeffs").items()) row.terms.push_back({std::stoul(key), value.get<int>()});
    std::sort(row.terms.begin(), row.terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
    row.rhs = parse_integer(scalar_text(r.at("rhs")));
    const auto family = family_from_name(r.at("family").get<std::string>());
    if (!family) throw Error(ErrorCode::MalformedInput, "unknown row family " + r.at("family").dump());
    row.family = *family;
    row.i = r.value("i", std::size_t{0});
    row.j = r.value("j", std::size_t{0});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline json encode(const ConstraintSystem& sys) {
  json vars = json::array();
  for (const auto& v : sys.vars) vars.push_back({{"i", v.row}, {"j", v.letter}});
  return {{"num_vars", sys.num_vars()},
          {"rank", sys.rank},
          {"vars", vars},
          {"eq", detail::encode_rows(sys.eq)},
          {"le", detail::encode_rows(sys.le)}};
}

inline ConstraintSystem decode_system(const json& j) {
  ConstraintSystem sys;
  sys.rank = j.value("rank", std::size_t{0});
  for (const auto& v : j.at("vars")) sys.vars.push_back({v.at("i").get<std::size_t>(), v.at("j").get<std::size_t>()});
  if (j.at("num_vars").get<std::size_t>() != sys.vars.size()) {
    throw Error(ErrorCode::DimensionMismatch, "num_vars disagrees with vars");
  }
  sys.eq = detail::decode_rows(j.at("eq"));
  sys.le = detail::decode_rows(j.at("le"));
  return sys;
}

// Decomposition: {rank, terms:[{gamma:[...], mult:"int"}]}

inline json encode(const Decomposition& d) {
  json terms = json::array();
  for (const auto& [gamma, mult] : d.terms) terms.push_back({{"gamma", encode(gamma)}, {"mult", mult.str()}});
  return {{"rank", d.rank}, {"terms", terms}};
}

inline Decomposition decode_decomposition(const json& j) {
  Decomposition d;
  d.rank = j.at("rank").get<std::size_t>();
  for (const auto& t : j.at("terms"))
    d.terms.emplace_back(decode_partition(t.at("gamma")), parse_integer(detail::scalar_text(t.at("mult"))));
  return d;
}

// Decision

inline json encode(const Decision& d) {
  json out = {{"positive", d.positive},
              {"route", std::string(route_name(d.route))},
              {"rank", d.rank},
              {"pivots", d.pivot_count},
              {"elapsed_us", d.elapsed.count()}};
  if (d.trivial_reason) out["trivial_reason"] = *d.trivial_reason;
  if (d.rational_witness) out["rational_witness"] = encode(*d.rational_witness);
  if (d.integral_witness) out["integral_witness"] = encode(*d.integral_witness);
  return out;
}

inline Decision decode_decision(const json& j) {
  Decision d;
  d.positive = j.at("positive").get<bool>();
  const auto route = route_from_name(j.at("route").get<std::string>());
  if (!route) throw Error(ErrorCode::MalformedInput, "unknown route " + j.at("route").dump());
  d.route = *route;
  d.rank = j.at("rank").get<std::size_t>();
  d.pivot_count = j.value("pivots", std::size_t{0});
  d.elapsed = std::chrono::microseconds(j.value("elapsed_us", std::int64_t{0}));
  if (j.contains("trivial_reason")) d.trivial_reason = j.at("trivial_reason").get<std::string>();
  if (j.contains("rational_witness")) d.rational_witness = decode_point(j.at("rational_witness"));
  if (j.contains("integral_witness")) {
    auto f = decode_filling(j.at("integral_witness"));
    f.rank = d.rank;
    d.integral_witness = std::move(f);
  }
  return d;
}

// SweepReport:
// {instances, lp_positive, lp_negative, oracle_checked, disagreements:[...], budget_failures, ...}

inline json encode(const Disagreement& d) {
  return {{"kind", d.kind},   {"alpha", encode(d.alpha)}, {"beta", encode(d.beta)}, {"gamma", encode(d.gamma)},
          {"rank", d.rank},   {"q", d.q.str()},           {"detail", d.detail}};
}

inline Disagreement decode_disagreement(const json& j) {
  return {j.at("kind").get<std::string>(),
          decode_partition(j.at("alpha")),
          decode_partition(j.at("beta")),
          decode_partition(j.at("gamma")),
          j.at("rank").get<std::size_t>(),
          parse_integer(detail::scalar_text(j.at("q"))),
          j.value("detail", std::string{})};
}

inline json encode(const SweepReport& r) {
  json dis = json::array();
  for (const auto& d : r.disagreements) dis.push_back(encode(d));
  return {{"instances", r.instances},
          {"lp_positive", r.lp_positive},
          {"lp_negative", r.lp_negative},
          {"oracle_checked", r.oracle_checked},
          {"disagreements", dis},
          {"budget_failures", r.budget_failures},
          {"saturation_checked", r.saturation_checked},
          {"witnesses_checked", r.witnesses_checked},
          {"integral_checked", r.integral_checked}};
}

inline SweepReport decode_sweep_report(const json& j) {
  SweepReport r;
  r.instances = j.at("instances").get<std::uint64_t>();
  r.lp_positive = j.at("lp_positive").get<std::uint64_t>();
  r.lp_negative = j.at("lp_negative").get<std::uint64_t>();
  r.oracle_checked = j.at("oracle_checked").get<std::uint64_t>();
  r.budget_failures = j.at("budget_failures").get<std::uint64_t>();
  r.saturation_checked = j.value("saturation_checked", std::uint64_t{0});
  r.witnesses_checked = j.value("witnesses_checked", std::uint64_t{0});
  r.integral_checked = j.value("integral_checked", std::uint64_t{0});
  for (const auto& d : j.at("disagreements")) r.disagreements.push_back(decode_disagreement(d));
  return r;
}

// Saturation probe (encode only; used by the CLI)

inline json encode(const ProbeReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json entry = {{"q", e.q.str()}, {"decision", encode(e.decision)}};
    if (e.oracle_count) entry["oracle_count"] = e.oracle_count->str();
    if (e.oracle_error) entry["oracle_error"] = *e.oracle_error;
    entries.push_back(entry);
  }
  return {{"entries", entries}, {"disagreement", r.disagreement}};
}

}  // namespace lrpos::io
