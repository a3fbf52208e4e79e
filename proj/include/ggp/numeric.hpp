#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ggp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an enumeration or group-size cap would be exceeded.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when two independent computation paths disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an iterative numeric routine fails to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer power by squaring; ipow(x, 0) == 1 for every x, including 0.
template <class T>
T ipow(T base, unsigned exponent) {
  T result{1};
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }
inline double to_double(const BigInt& value) { return value.convert_to<double>(); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Fixed 15-significant-digit rendering, locale independent.
std::string format_real(double value);

/// Parses "3", "-2/7", "0.125", "1e-3", "2.5E2" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// The exact rational value of a finite double.
Rational rational_from_double(double value);

BigInt double_factorial_odd(unsigned n);  // (2n-1)!!, with n = 0 giving 1
BigInt binomial(unsigned n, unsigned k);
BigInt catalan(unsigned n);

}  // namespace ggp
