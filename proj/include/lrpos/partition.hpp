#pragma once

#include "lrpos/error.hpp"
#include "lrpos/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lrpos {

/// Rank of the ambient group GL_n.
using Rank = std::size_t;

/// A weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored; the empty partition is a regular value that renders as "0".
class Partition {
 public:
  Partition() = default;

  /// Validates and canonicalizes: trailing zeros are dropped.
  explicit Partition(std::vector<BigInt> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
      if (p < 0) throw Error(ErrorCode::NegativePart, "part " + p.str() + " is negative");
    }
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      if (parts_[i - 1] < parts_[i]) {
        throw Error(ErrorCode::NotWeaklyDecreasing,
                    "part " + parts_[i].str() + " follows smaller part " + parts_[i - 1].str());
      }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  Partition(std::initializer_list<long> parts)
      : Partition(std::vector<BigInt>(parts.begin(), parts.end())) {}

  const std::vector<BigInt>& parts() const noexcept { return parts_; }
  std::size_t height() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based), zero beyond the height.
  BigInt part(std::size_t i) const { return i < parts_.size() ? parts_[i] : BigInt(0); }

  /// Parts padded with zeros to length n; n must be >= height().
  std::vector<BigInt> padded(Rank n) const {
    if (height() > n) {
      throw Error(ErrorCode::HeightExceedsRank,
                  "height " + std::to_string(height()) + " exceeds rank " + std::to_string(n));
    }
    std::vector<BigInt> out(parts_);
    out.resize(n, BigInt(0));
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Lexicographic on parts; a proper prefix compares less.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const auto n = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.parts_[i] < b.parts_[i]) return std::strong_ordering::less;
      if (b.parts_[i] < a.parts_[i]) return std::strong_ordering::greater;
    }
    return a.parts_.size() <=> b.parts_.size();
  }

 private:
  std::vector<BigInt> parts_;
};

inline BigInt size(const Partition& p) {
  BigInt total = 0;
  for (const auto& part : p.parts()) total += part;
  return total;
}

/// Sum of the bit lengths of the parts.
inline std::size_t bit_length(const Partition& p) {
  std::size_t bits = 0;
  for (const auto& part : p.parts()) bits += boost::multiprecision::msb(part) + 1;
  return bits;
}

inline Partition scale(const Partition& p, const BigInt& q) {
  if (q < 1) throw Error(ErrorCode::NonpositiveScale, "scale factor " + q.str() + " is not positive");
  std::vector<BigInt> parts;
  parts.reserve(p.height());
  for (const auto& part : p.parts()) parts.push_back(part * q);
  return Partition(std::move(parts));
}

/// Componentwise inner <= outer, i.e. the diagram of inner sits inside outer.
inline bool contains(const Partition& outer, const Partition& inner) {
  if (inner.height() > outer.height()) return false;
  for (std::size_t i = 0; i < inner.height(); ++i) {
    if (inner.parts()[i] > outer.parts()[i]) return false;
  }
  return true;
}

/// Canonical text: "4,2,2,1"; the empty partition is "0".
inline std::string render(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.height(); ++i) {
    if (i) out += ',';
    out += p.parts()[i].str();
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace detail

/// Comma-separated signed decimal integers, whitespace tolerated. The empty
/// string yields an empty list.
inline std::vector<BigInt> parse_integer_list(std::string_view text) {
  const auto body = detail::trim(text);
  std::vector<BigInt> values;
  if (body.empty()) return values;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    const auto token = detail::trim(body.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (!detail::is_decimal(token)) {
      throw Error(ErrorCode::MalformedInput, "'" + std::string(token) + "' is not a decimal integer");
    }
    values.emplace_back(std::string(token.front() == '+' ? token.substr(1) : token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

/// Parses "a,b,c". "" and "0" are the empty partition.
inline Partition parse_partition(std::string_view text) { return Partition(parse_integer_list(text)); }

/// Dimension of the irreducible GL_n module V_lambda, by the Weyl product
/// formula prod_{i<j} (l_i - l_j + j - i) / (j - i).
inline BigInt weyl_dimension(const Partition& lambda, Rank n) {
  const auto l = lambda.padded(n);
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= l[i] - l[j] + BigInt(j - i);
      den *= BigInt(j - i);
    }
  }
  return num / den;
}

/// All partitions of `total` with at most `max_height` parts, in descending
/// lexicographic order.
inline std::vector<Partition> partitions_of(std::size_t total, std::size_t max_height) {
  std::vector<Partition> out;
  std::vector<BigInt> current;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (current.size() == max_height) return;
    for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
      current.emplace_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

/// All partitions of size at most `max_total` with at most `max_height` parts,
/// grouped by increasing size.
inline std::vector<Partition> partitions_up_to(std::size_t max_total, std::size_t max_height) {
  std::vector<Partition> out;
  for (std::size_t s = 0; s <= max_total; ++s) {
    auto level = partitions_of(s, max_height);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace lrpos
