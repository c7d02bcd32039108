#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>

#include "adjfol/errors.hpp"

namespace adjfol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline BigInt to_bigint(const Rational& r) {
  if (!is_integer(r)) detail::fail_consistency("expected an integer, got " + to_string(r));
  return boost::multiprecision::numerator(r);
}

inline std::int64_t to_int64(const Rational& r) {
  return to_bigint(r).convert_to<std::int64_t>();
}

/// Random rational p/q with |p| <= height and 1 <= q <= height.
template <class Rng>
Rational random_rational(Rng& rng, int height) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, height);
  return Rational(num(rng), den(rng));
}

/// Same as random_rational but never zero.
template <class Rng>
Rational random_nonzero_rational(Rng& rng, int height) {
  for (;;) {
    Rational r = random_rational(rng, height);
    if (r != 0) return r;
  }
}

}  // namespace adjfol
