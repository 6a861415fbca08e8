#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

// Univariate polynomial in r with exact rational coefficients. coeff(k) is
// the coefficient of r^k; trailing zeros are trimmed, the zero polynomial
// has an empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  // a*r + b
  static UniPoly linear(const Rational& a, const Rational& b);
  // expands the product of the given linear factors (a_i*r + b_i)
  static UniPoly expand_linear_factors(
      std::span<const std::pair<Rational, Rational>> factors);

  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& r) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rational& s) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "r") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

// Truncated power series helpers over rational coefficients; vectors hold
// coefficients of x^0..x^n. Used to generate characteristic-class
// coefficient tables from their defining series.
namespace series {

std::vector<Rational> mul(std::span<const Rational> a,
                          std::span<const Rational> b, int n);
// requires a[0] != 0
std::vector<Rational> inverse(std::span<const Rational> a, int n);
// log of a series with constant term 1
std::vector<Rational> log(std::span<const Rational> a, int n);
// exp of a series with constant term 0
std::vector<Rational> exp(std::span<const Rational> a, int n);

// coefficients s_0..s_n of log(x / (1 - e^{-x})); s_0 = 0
std::vector<Rational> todd_log_series(int n);

}  // namespace series

}  // namespace chern
