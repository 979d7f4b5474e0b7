#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cox {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const BigInt& z) { return z.str(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cox
