#pragma once

// Scalar backends: exact GMP rationals and IEEE doubles behind one traits
// interface. Every algorithm in the library is a template over the scalar.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvlab {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Default relative tolerance for the floating-point backend.
inline constexpr double kDefaultTol = 1e-9;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Decimal integer text; GMP would read a leading 0 as an octal prefix.
inline BigInt parse_decimal_integer(std::string s) {
  std::size_t start = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (start == s.size()) throw ParseError("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("malformed integer '" + s + "'");
  std::size_t first = s.find_first_not_of('0', start);
  std::string digits = first == std::string::npos ? "0" : s.substr(first);
  BigInt v(digits);
  return s[0] == '-' ? BigInt(-v) : v;
}

// Accepts "p", "p/q", and decimals with optional exponent ("-1.25e-3").
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty scalar");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num, den;
    try {
      num = parse_decimal_integer(s.substr(0, slash));
      den = parse_decimal_integer(s.substr(slash + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed rational '" + s + "'");
    }
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = (s[pos++] == '-');
  std::string digits;
  long exponent = 0;
  bool seen_digit = false, seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw ParseError("malformed number '" + s + "'");
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError("malformed exponent in '" + s + "'");
    }
    if (pos + used != s.size()) throw ParseError("malformed number '" + s + "'");
    exponent += e;
  }
  BigInt mantissa = parse_decimal_integer(digits);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  return negative ? Rational(-value) : value;
}

}  // namespace detail

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static bool is_zero(const Rational& x, double /*tol*/ = kDefaultTol) { return x == 0; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  // Exact: every finite double is a dyadic rational.
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite value cannot be made exact");
    return Rational(x);
  }
  static Rational parse(std::string_view s) { return detail::parse_rational(s); }
  static std::string to_string(const Rational& x) { return x.str(); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static bool is_zero(double x, double tol = kDefaultTol) { return std::abs(x) <= tol; }
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
  static double parse(std::string_view s) {
    return ScalarTraits<Rational>::to_double(detail::parse_rational(s));
  }
  static std::string to_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
  static double abs(double x) { return std::abs(x); }
};

/// Integers only appear in incidence matrices; enough to store and convert.
template <>
struct ScalarTraits<BigInt> {
  static constexpr bool exact = true;
  static constexpr const char* name = "integer";

  static bool is_zero(const BigInt& x, double /*tol*/ = kDefaultTol) { return x == 0; }
  static double to_double(const BigInt& x) { return x.convert_to<double>(); }
  static std::string to_string(const BigInt& x) { return x.str(); }
  static BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
};

template <class T, class S>
T scalar_cast(const S& x) {
  if constexpr (std::is_same_v<T, S>) {
    return x;
  } else if constexpr (std::is_same_v<T, Rational> && std::is_same_v<S, BigInt>) {
    return Rational(x);
  } else if constexpr (std::is_same_v<T, double>) {
    return ScalarTraits<S>::to_double(x);
  } else {
    return ScalarTraits<T>::from_double(ScalarTraits<S>::to_double(x));
  }
}

/// Zero test: exact for rationals, `|x| <= tol * scale` for doubles.
template <class S>
bool is_zero(const S& x, double tol = kDefaultTol, double scale = 1.0) {
  if constexpr (ScalarTraits<S>::exact) {
    return x == 0;
  } else {
    return std::abs(x) <= tol * std::max(1.0, scale);
  }
}

template <class S>
bool nearly_equal(const S& a, const S& b, double tol = kDefaultTol) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
}

template <class S>
S ipow(S base, unsigned exp) {
  S result(1);
  while (exp) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace curvlab
