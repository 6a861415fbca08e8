#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "chern/error.hpp"

namespace chern {

using BigInt = mpz_class;

// Exact fraction with denominator > 0 and gcd(|num|, den) = 1 after every
// operation; zero is always 0/1. The scalar type of every computation.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(const BigInt& n) : v_(n) {}                   // NOLINT(runtime/explicit)
  Rational(long n, long d);
  Rational(const BigInt& n, const BigInt& d);

  // Accepts "n", "-n" or "n/d"; returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  Rational pow(unsigned e) const;

  std::string to_string() const;

 private:
  mpq_class v_;  // kept canonical: positive denominator, lowest terms
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Binomial coefficient with the convention that out-of-range inputs give 0
// (k > n or n < 0). Callers pass k >= 0.
BigInt binomial(long n, long k);

BigInt factorial(unsigned n);

}  // namespace chern
