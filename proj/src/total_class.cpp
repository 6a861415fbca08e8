#include "chern/total_class.hpp"

#include <algorithm>

#include "chern/unipoly.hpp"

namespace chern {

namespace {

void require_same_ring(const TotalClass& a, const TotalClass& b) {
  if (a.ring().get() != b.ring().get())
    throw Error(Errc::ring_mismatch, "classes over different rings");
}

}  // namespace

TotalClass TotalClass::unit(const RingPtr& ring, int rank) {
  TotalClass t;
  t.ring_ = ring;
  t.rank_ = rank;
  t.parts_.assign(static_cast<size_t>(ring->degree_count()), ring->zero());
  t.parts_[0] = ring->one();
  return t;
}

TotalClass TotalClass::from_parts(const RingPtr& ring, int rank,
                                  const std::vector<RingElement>& parts) {
  TotalClass t = unit(ring, rank);
  for (size_t k = 0; k < parts.size() && k < t.parts_.size(); ++k) {
    if (!parts[k].is_homogeneous(static_cast<int>(k) * 2))
      throw Error(Errc::inhomogeneous_class,
                  "part " + std::to_string(k) + " is not homogeneous of degree " +
                      std::to_string(2 * k));
    t.parts_[k] = parts[k];
  }
  if (!(t.parts_[0] == ring->one()))
    throw Error(Errc::inhomogeneous_class, "total class must start with 1");
  for (size_t k = parts.size(); k < t.parts_.size(); ++k) t.parts_[k] = ring->zero();
  return t;
}

TotalClass TotalClass::from_element(const RingPtr& ring, int rank, const RingElement& e) {
  std::vector<RingElement> parts;
  for (int k = 0; k <= ring->top_degree() / 2; ++k) parts.push_back(e.part(2 * k));
  return from_parts(ring, rank, parts);
}

TotalClass TotalClass::line(const RingElement& t) {
  if (!t.is_homogeneous(2))
    throw Error(Errc::inhomogeneous_class, "line class needs a degree-2 element");
  const RingPtr& ring = t.ring();
  return from_parts(ring, 1, {ring->one(), t});
}

RingElement TotalClass::as_element() const {
  RingElement acc = ring_->zero();
  for (const auto& p : parts_) acc += p;
  return acc;
}

bool TotalClass::vanishes_above_rank() const {
  for (int k = rank_ + 1; k <= top_index(); ++k)
    if (!parts_[static_cast<size_t>(k)].is_zero()) return false;
  return true;
}

std::string TotalClass::to_string() const { return as_element().to_string(); }

TotalClass whitney(const TotalClass& a, const TotalClass& b) {
  require_same_ring(a, b);
  TotalClass out = TotalClass::unit(a.ring(), a.rank() + b.rank());
  const int n = out.top_index();
  std::vector<RingElement> parts(static_cast<size_t>(n) + 1, a.ring()->zero());
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k; ++i)
      parts[static_cast<size_t>(k)] += a.part(i) * b.part(k - i);
  return TotalClass::from_parts(a.ring(), a.rank() + b.rank(), parts);
}

TotalClass series_quotient(const TotalClass& a, const TotalClass& b) {
  require_same_ring(a, b);
  const int n = a.top_index();
  std::vector<RingElement> q(static_cast<size_t>(n) + 1, a.ring()->zero());
  q[0] = a.ring()->one();
  for (int k = 1; k <= n; ++k) {
    RingElement acc = a.part(k);
    for (int i = 1; i <= k; ++i) acc -= b.part(i) * q[static_cast<size_t>(k - i)];
    q[static_cast<size_t>(k)] = acc;
  }
  return TotalClass::from_parts(a.ring(), std::max(0, a.rank() - b.rank()), q);
}

TotalClass conjugate(const TotalClass& a) {
  std::vector<RingElement> parts = a.parts();
  for (size_t k = 1; k < parts.size(); k += 2) parts[k] = -parts[k];
  return TotalClass::from_parts(a.ring(), a.rank(), parts);
}

TotalClass twist_line(const TotalClass& e, const RingElement& t) {
  if (!t.is_homogeneous(2))
    throw Error(Errc::inhomogeneous_class, "twist class must be homogeneous of degree 2");
  if (t.ring().get() != e.ring().get())
    throw Error(Errc::ring_mismatch, "twist class over another ring");
  const int r = e.rank();
  const int n = e.top_index();
  std::vector<RingElement> parts(static_cast<size_t>(n) + 1, e.ring()->zero());
  std::vector<RingElement> tpow(static_cast<size_t>(n) + 1, e.ring()->one());
  for (int k = 1; k <= n; ++k) tpow[static_cast<size_t>(k)] = tpow[static_cast<size_t>(k - 1)] * t;
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k && i <= r; ++i) {
      Rational binom(binomial(r - i, k - i));
      if (binom.is_zero()) continue;
      parts[static_cast<size_t>(k)] +=
          binom * (e.part(i) * tpow[static_cast<size_t>(k - i)]);
    }
  return TotalClass::from_parts(e.ring(), r, parts);
}

std::pair<RingElement, RingElement> pontryagin(const TotalClass& a) {
  RingElement p1 = a.part(1) * a.part(1) - Rational(2) * a.part(2);
  RingElement p2 = a.part(2) * a.part(2) - Rational(2) * (a.part(1) * a.part(3)) +
                   Rational(2) * a.part(4);
  return {p1, p2};
}

std::vector<RingElement> power_sums(const TotalClass& a, int through) {
  // p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
  std::vector<RingElement> p(static_cast<size_t>(through) + 1, a.ring()->zero());
  for (int k = 1; k <= through; ++k) {
    RingElement acc = a.ring()->zero();
    for (int i = 1; i < k; ++i) {
      RingElement term = a.part(i) * p[static_cast<size_t>(k - i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    RingElement last = Rational(k) * a.part(k);
    acc += (k % 2 == 1) ? last : -last;
    p[static_cast<size_t>(k)] = acc;
  }
  return p;
}

TotalClass chern_from_power_sums(const RingPtr& ring, int rank,
                                 const std::vector<RingElement>& p) {
  // k c_k = sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i
  const int n = ring->top_degree() / 2;
  std::vector<RingElement> c(static_cast<size_t>(n) + 1, ring->zero());
  c[0] = ring->one();
  for (int k = 1; k <= n; ++k) {
    RingElement acc = ring->zero();
    for (int i = 1; i <= k && i < static_cast<int>(p.size()); ++i) {
      RingElement term = c[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    c[static_cast<size_t>(k)] = Rational(1, k) * acc;
  }
  return TotalClass::from_parts(ring, rank, c);
}

std::vector<RingElement> chern_character(const TotalClass& a, int through_degree) {
  std::vector<RingElement> ch(static_cast<size_t>(through_degree) + 1, a.ring()->zero());
  ch[0] = a.ring()->scalar(Rational(a.rank()));
  auto p = power_sums(a, through_degree);
  for (int k = 1; k <= through_degree; ++k)
    ch[static_cast<size_t>(k)] =
        Rational(BigInt(1), factorial(static_cast<unsigned>(k))) * p[static_cast<size_t>(k)];
  return ch;
}

std::vector<RingElement> todd(const TotalClass& a) {
  const int n = a.ring()->top_degree() / 2;
  // log td = sum_k s_k p_k with s_k the series coefficients of
  // log(x/(1-e^{-x})); s_0 = 0 so the rank does not enter
  std::vector<Rational> s = series::todd_log_series(n);
  auto p = power_sums(a, n);
  RingElement logtd = a.ring()->zero();
  for (int k = 1; k <= n; ++k) logtd += s[static_cast<size_t>(k)] * p[static_cast<size_t>(k)];
  // exponentiate the graded series
  std::vector<RingElement> out(static_cast<size_t>(n) + 1, a.ring()->zero());
  out[0] = a.ring()->one();
  RingElement power = a.ring()->one();
  Rational inv_fact(1);
  for (int m = 1; m <= n; ++m) {
    power = power * logtd;
    inv_fact /= Rational(m);
    RingElement scaled = inv_fact * power;
    for (int k = 1; k <= n; ++k) out[static_cast<size_t>(k)] += scaled.part(2 * k);
  }
  return out;
}

Space flip(const Space& space, const TotalClass& fiber) {
  if (fiber.ring().get() != space.ring.get())
    throw Error(Errc::ring_mismatch, "fiber class over another ring");
  if (fiber.rank() < 1) throw Error(Errc::rank_zero, "fiber must have rank >= 1");
  if (!fiber.vanishes_above_rank())
    throw Error(Errc::inhomogeneous_class, "fiber class has parts above its rank");
  TotalClass complement = series_quotient(space.tangent, fiber);
  for (int k = space.tangent.rank() - fiber.rank() + 1; k <= complement.top_index(); ++k) {
    if (k < 0) continue;
    if (!complement.part(k).is_zero())
      throw Error(Errc::not_a_summand, "fiber is not a summand");
  }
  TotalClass flipped = whitney(complement, conjugate(fiber));
  Space out = space;
  out.tangent = flipped;
  out.orientation = fiber.rank() % 2 == 0 ? space.orientation : -space.orientation;
  out.provenance = "flip of " + space.name + " along a rank-" +
                   std::to_string(fiber.rank()) + " fiber";
  return out;
}

const std::array<std::vector<int>, ChernNumberTable::kCount>&
ChernNumberTable::partitions() {
  static const std::array<std::vector<int>, kCount> parts = {{
      {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}}};
  return parts;
}

const std::array<const char*, ChernNumberTable::kCount>& ChernNumberTable::labels() {
  static const std::array<const char*, kCount> names = {
      "c5", "c1c4", "c2c3", "c1^2c3", "c1c2^2", "c1^3c2", "c1^5"};
  return names;
}

const std::array<int, ChernNumberTable::kCount>& ChernNumberTable::display_order() {
  // c5, c1^5, c1^3c2, c1^2c3, c1c4, c1c2^2, c2c3
  static const std::array<int, kCount> order = {0, 6, 5, 3, 1, 4, 2};
  return order;
}

const Rational& ChernNumberTable::by_label(const std::string& label) const {
  for (int i = 0; i < kCount; ++i)
    if (labels()[static_cast<size_t>(i)] == label) return values[static_cast<size_t>(i)];
  throw Error(Errc::unknown_symbol, "no Chern number " + label);
}

bool ChernNumberTable::all_integral() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Rational& v) { return v.is_integer(); });
}

ChernNumberTable chern_numbers(const Space& space) {
  if (space.ring->top_degree() != 10)
    throw Error(Errc::invalid_presentation,
                "Chern-number table requires truncation index 5");
  ChernNumberTable out;
  const auto& parts = ChernNumberTable::partitions();
  for (int i = 0; i < ChernNumberTable::kCount; ++i) {
    RingElement prod = space.ring->one();
    for (int k : parts[static_cast<size_t>(i)]) prod = prod * space.tangent.part(k);
    out.values[static_cast<size_t>(i)] = space.ring->evaluate_top(prod, space.orientation);
  }
  return out;
}

}  // namespace chern
