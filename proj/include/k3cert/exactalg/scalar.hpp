#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "k3cert/errors.hpp"

namespace k3cert {

using Integer = boost::multiprecision::mpz_int;

/// Exact rational number in lowest terms with a positive denominator.
///
/// This is the ground field of every computation in the library. The GMP
/// backend keeps values canonical after each operation, so equality is
/// structural.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral T>
  Scalar(T value) : value_(static_cast<long long>(value)) {}  // NOLINT

  Scalar(const Integer& value) : value_(value) {}  // NOLINT

  Scalar(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("Scalar: zero denominator");
    value_ = Rational(num, den);
  }

  /// Parses "p/q" or "p" (optional leading '-').
  static Scalar parse(std::string_view text) {
    if (text.empty()) throw ParseError("Scalar: empty string");
    const auto slash = text.find('/');
    auto check_digits = [&](std::string_view part, bool allow_sign) {
      std::size_t start = 0;
      if (allow_sign && !part.empty() && part[0] == '-') start = 1;
      if (start == part.size()) throw ParseError("Scalar: malformed '" + std::string(text) + "'");
      for (std::size_t i = start; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') {
          throw ParseError("Scalar: malformed '" + std::string(text) + "'");
        }
      }
    };
    if (slash == std::string_view::npos) {
      check_digits(text, true);
      return Scalar(Integer(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    return Scalar(Integer(std::string(num)), Integer(std::string(den)));
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const {
    const Integer den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("Scalar: inverse of zero");
    return Scalar(Rational(1) / value_);
  }

  /// Integer power; negative exponents invert.
  Scalar pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar result(1);
    Scalar base = *this;
    auto e = static_cast<unsigned>(exponent);
    while (e != 0) {
      if ((e & 1U) != 0) result *= base;
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("Scalar: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(Rational(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  using Rational = boost::multiprecision::mpq_rational;
  explicit Scalar(Rational value) : value_(std::move(value)) {}

  Rational value_{0};
};

inline Integer integer_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer integer_lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace k3cert
