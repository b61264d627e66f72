#pragma once

// Exact integer/rational arithmetic shared by every module.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffc {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// Only used for convergence reports; every asserted quantity is exact.
using HighPrecision = boost::multiprecision::mpfr_float_100;

/// Thrown when a request exceeds a budget or coverage limit. Results are
/// never silently truncated.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exact identity that must hold by construction fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt ipow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("ipow: negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

/// base^exponent for any integer exponent, as an exact rational.
inline Rational qpow(std::int64_t base, std::int64_t exponent) {
  if (exponent >= 0) return Rational(ipow(base, exponent));
  return Rational(BigInt(1), ipow(base, -exponent));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Exact integer square-root floor.
inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

}  // namespace ffc
