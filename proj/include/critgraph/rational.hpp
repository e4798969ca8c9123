#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "critgraph/errors.hpp"

namespace critgraph {

// Exact arbitrary-precision rational, kept in canonical reduced form with a
// positive denominator. All potential and charge arithmetic goes through
// this type; floating point never enters those code paths.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

// Renders as "num/den", or just "num" when the denominator is 1.
inline std::string to_fraction_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Parses "num", "-num", or "num/den". This is the only rational syntax the
// CLI accepts; decimal notation is rejected.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&](std::size_t at) {
    throw ParseError("invalid rational '" + std::string(text) + "'", at);
  };
  if (text.empty()) bad(0);
  std::size_t slash = text.find('/');
  auto parse_int = [&](std::string_view part, std::size_t base) -> BigInt {
    if (part.empty()) bad(base);
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) bad(base + i);
    for (std::size_t j = i; j < part.size(); ++j)
      if (part[j] < '0' || part[j] > '9') bad(base + j);
    return BigInt(std::string(part));
  };
  BigInt num = parse_int(text.substr(0, slash), 0);
  if (slash == std::string_view::npos) return Rational(num);
  BigInt den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) bad(slash + 1);
  return Rational(num, den);
}

}  // namespace critgraph
