#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "gprod/error.hpp"

namespace gprod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 decimal digits with a wide exponent; p^(k(k-1)) does not underflow.
using Real = boost::multiprecision::cpp_bin_float_50;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Falling factorial a (a-1) ... (a-k+1).
inline BigInt falling_factorial(std::uint64_t a, std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (a < i) return 0;
    r *= a - i;
  }
  return r;
}

/// x^e for a signed integer exponent, by repeated squaring. Works for double,
/// Rational and Real.
template <class T>
T ipow(const T& x, long long e) {
  if (e < 0) return T(1) / ipow(x, -e);
  T result(1);
  T base(x);
  auto u = static_cast<unsigned long long>(e);
  while (u != 0) {
    if (u & 1U) result *= base;
    u >>= 1;
    if (u != 0) base *= base;
  }
  return result;
}

template <class T>
T from_big(const BigInt& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return v.template convert_to<T>();
  } else {
    return T(v);
  }
}

template <class T>
double to_double(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<double>(v);
  } else {
    return v.template convert_to<double>();
  }
}

/// Parses a decimal literal ("0.25", "3", "1e-3", "-2.5E2") or a fraction
/// ("1/4") into an exact rational.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&]() { return invalid_parameters("not a number: \"" + s + "\""); };
  if (s.empty()) throw bad();
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = parse_rational(s.substr(0, slash));
    const Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw bad();
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  BigInt digits = 0;
  long long scale = 0;
  bool any = false;
  bool fraction = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (fraction) --scale;
      any = true;
    } else if (c == '.' && !fraction) {
      fraction = true;
    } else {
      break;
    }
  }
  if (!any) throw bad();
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw bad();
    long long exponent = 0;
    std::istringstream in(s.substr(i + 1));
    if (!(in >> exponent) || !in.eof()) throw bad();
    scale += exponent;
  }
  Rational r(digits);
  if (scale > 0) r *= ipow(Rational(10), scale);
  if (scale < 0) r /= ipow(Rational(10), -scale);
  return negative ? Rational(-r) : r;
}

}  // namespace gprod
