#include "chern/unipoly.hpp"

#include <ostream>

namespace chern {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::linear(const Rational& a, const Rational& b) {
  return UniPoly({b, a});
}

UniPoly UniPoly::expand_linear_factors(
    std::span<const std::pair<Rational, Rational>> factors) {
  UniPoly acc = constant(1);
  for (const auto& [a, b] : factors) acc = acc * linear(a, b);
  return acc;
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational UniPoly::eval(const Rational& r) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * r + c_[i];
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> out = c_;
  for (auto& x : out) x *= s;
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    const bool unit = a == Rational(1);
    if (i == 0) {
      out += a.to_string();
    } else {
      if (!unit) out += a.to_string() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  return os << p.to_string();
}

namespace series {

std::vector<Rational> mul(std::span<const Rational> a,
                          std::span<const Rational> b, int n) {
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j)
      out[static_cast<size_t>(i + j)] +=
          a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  return out;
}

std::vector<Rational> inverse(std::span<const Rational> a, int n) {
  if (a.empty() || a[0].is_zero())
    throw Error(Errc::division_by_zero, "series inverse needs nonzero constant term");
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  out[0] = Rational(1) / a[0];
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i)
      acc += a[static_cast<size_t>(i)] * out[static_cast<size_t>(k - i)];
    out[static_cast<size_t>(k)] = -acc / a[0];
  }
  return out;
}

std::vector<Rational> log(std::span<const Rational> a, int n) {
  // log(f) via (log f)' = f'/f, integrated term by term
  if (a.empty() || a[0] != Rational(1))
    throw Error(Errc::invalid_presentation, "series log needs constant term 1");
  std::vector<Rational> inv = inverse(a, n);
  std::vector<Rational> deriv(static_cast<size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
    deriv[static_cast<size_t>(k - 1)] = a[static_cast<size_t>(k)] * Rational(k);
  std::vector<Rational> prod = mul(deriv, inv, n);
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n; ++k)
    out[static_cast<size_t>(k)] = prod[static_cast<size_t>(k - 1)] / Rational(k);
  return out;
}

std::vector<Rational> exp(std::span<const Rational> a, int n) {
  if (!a.empty() && !a[0].is_zero())
    throw Error(Errc::invalid_presentation, "series exp needs constant term 0");
  // exp(f)' = f' exp(f): out[k] = (1/k) sum_{i=1..k} i*a[i]*out[k-i]
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  out[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i)
      acc += Rational(i) * a[static_cast<size_t>(i)] *
             out[static_cast<size_t>(k - i)];
    out[static_cast<size_t>(k)] = acc / Rational(k);
  }
  return out;
}

std::vector<Rational> todd_log_series(int n) {
  // g(x) = (1 - e^{-x})/x = sum_{k>=0} (-1)^k x^k / (k+1)!
  std::vector<Rational> g(static_cast<size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    Rational term(BigInt(1), factorial(static_cast<unsigned>(k + 1)));
    g[static_cast<size_t>(k)] = (k % 2 == 0) ? term : -term;
  }
  // log(x/(1-e^{-x})) = -log(g)
  std::vector<Rational> lg = log(g, n);
  for (auto& x : lg) x = -x;
  return lg;
}

}  // namespace series

}  // namespace chern
