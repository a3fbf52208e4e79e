#include "ggp/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace ggp {

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

namespace {

BigInt parse_digits(std::string_view digits) {
  BigInt out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d = parse_digits(den);
    if (d == 0) bad(text);
    value = Rational(parse_digits(num), d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 4) bad(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad(text);
    if (!int_part.empty() && !all_digits(int_part)) bad(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad(text);
    BigInt digits = parse_digits(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());
    BigInt scale = ipow<BigInt>(10, static_cast<unsigned>(std::labs(exponent)));
    value = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  }
  return negative ? Rational(-value) : value;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite parameter");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational out{BigInt(scaled)};
  if (exponent >= 0) {
    out *= Rational(ipow<BigInt>(2, static_cast<unsigned>(exponent)));
  } else {
    out /= Rational(ipow<BigInt>(2, static_cast<unsigned>(-exponent)));
  }
  return out;
}

BigInt double_factorial_odd(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 1; k <= n; ++k) out *= 2 * k - 1;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace ggp
