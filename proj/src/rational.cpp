#include "chern/rational.hpp"

#include <cctype>
#include <ostream>

namespace chern {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::ring_mismatch: return "ring_mismatch";
    case Errc::invalid_presentation: return "invalid_presentation";
    case Errc::non_confluent_rules: return "non_confluent_rules";
    case Errc::odd_degree_generator: return "odd_degree_generator";
    case Errc::missing_top_evaluation: return "missing_top_evaluation";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::rank_zero: return "rank_zero";
    case Errc::inhomogeneous_class: return "inhomogeneous_class";
    case Errc::not_a_summand: return "not_a_summand";
    case Errc::not_divisible: return "not_divisible";
    case Errc::unknown_symbol: return "unknown_symbol";
    case Errc::incomparable_presentations: return "incomparable_presentations";
    case Errc::parse_error: return "parse_error";
    case Errc::usage_error: return "usage_error";
    case Errc::check_failed: return "check_failed";
  }
  return "unknown";
}

Rational::Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (sgn(d) == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) return std::nullopt;
    return Rational(BigInt(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  BigInt d{std::string(den)};
  if (sgn(d) == 0) return std::nullopt;
  return Rational(BigInt(std::string(num)), d);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  Rational acc(1);
  Rational base = *this;
  while (e != 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

std::string Rational::to_string() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt acc = 1;
  // n choose k = prod_{i=1..k} (n-k+i)/i, exact at every step
  for (long i = 1; i <= k; ++i) {
    acc *= BigInt(n - k + i);
    acc /= BigInt(i);
  }
  return acc;
}

BigInt factorial(unsigned n) {
  BigInt acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= BigInt(static_cast<long>(i));
  return acc;
}

}  // namespace chern
