#ifndef XCOMPLEX_RATIONAL_HPP
#define XCOMPLEX_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xcomplex {

using BigInt = boost::multiprecision::cpp_int;
/// Always normalized: gcd(|numerator|, denominator) = 1 and denominator > 0.
using ExactRational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when q = 1.
inline std::string to_string(const ExactRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline BigInt big_pow(std::size_t base, std::size_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

}  // namespace xcomplex

#endif
