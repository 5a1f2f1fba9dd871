#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lrpos {

/// Exact integer and rational scalars. Every quantity that can scale with the
/// input partitions uses these; fixed-width integers only count nodes/pivots.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q" in lowest terms with positive denominator, or "p" when q == 1.
inline std::string to_string(const BigRational& v) { return v.str(); }

inline BigRational parse_rational(std::string_view text) {
  return BigRational(std::string(text));
}

inline BigInt parse_integer(std::string_view text) {
  return BigInt(std::string(text));
}

}  // namespace lrpos
