#pragma once

#include <array>
#include <string>
#include <vector>

#include "chern/ring.hpp"

namespace chern {

// Total characteristic class 1 + c_1 + ... + c_top of a bundle of the given
// rank; part k is homogeneous of degree 2k and part 0 is 1. Quotients of
// total classes are carried in the same representation (the rank is then
// formal bookkeeping and parts above it need not vanish).
class TotalClass {
 public:
  static TotalClass unit(const RingPtr& ring, int rank = 0);
  // parts[k] = c_k (index 0 must be 1); missing high parts are zero
  static TotalClass from_parts(const RingPtr& ring, int rank,
                               const std::vector<RingElement>& parts);
  // splits an inhomogeneous element into graded parts
  static TotalClass from_element(const RingPtr& ring, int rank, const RingElement& e);
  // 1 + t for a degree-2 element t
  static TotalClass line(const RingElement& t);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  int top_index() const { return static_cast<int>(parts_.size()) - 1; }
  const RingElement& part(int k) const { return parts_.at(static_cast<size_t>(k)); }
  const std::vector<RingElement>& parts() const { return parts_; }
  RingElement as_element() const;

  // c_k = 0 for rank < k <= top_index
  bool vanishes_above_rank() const;

  friend bool operator==(const TotalClass& a, const TotalClass& b) {
    return a.rank_ == b.rank_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const TotalClass& a, const TotalClass& b) { return !(a == b); }

  std::string to_string() const;

 private:
  RingPtr ring_;
  int rank_ = 0;
  std::vector<RingElement> parts_;
};

// Whitney product; ranks add.
TotalClass whitney(const TotalClass& a, const TotalClass& b);

// The unique truncated series q with q*b = a (b_0 = 1 always holds).
TotalClass series_quotient(const TotalClass& a, const TotalClass& b);

// c_k -> (-1)^k c_k
TotalClass conjugate(const TotalClass& a);

// Chern class of E tensor a line bundle with first Chern class t:
//   c'_k = sum_i binomial(rank-i, k-i) c_i t^{k-i}
TotalClass twist_line(const TotalClass& e, const RingElement& t);

// p_1 = c_1^2 - 2c_2,  p_2 = c_2^2 - 2c_1c_3 + 2c_4
std::pair<RingElement, RingElement> pontryagin(const TotalClass& a);

// Newton power sums p_1..p_n of the Chern roots.
std::vector<RingElement> power_sums(const TotalClass& a, int through);

// elementary symmetric classes recovered from power sums
TotalClass chern_from_power_sums(const RingPtr& ring, int rank,
                                 const std::vector<RingElement>& p);

// ch_0 = rank, ch_k = p_k / k!
std::vector<RingElement> chern_character(const TotalClass& a, int through_degree = 5);

// Todd class parts td_0..td_top, generated from the series
// log(x/(1-e^{-x})) via power sums; no transcribed coefficient tables.
std::vector<RingElement> todd(const TotalClass& a);

// A named almost complex structure: ring + tangent class + orientation
// relative to the ring's reference fundamental evaluation.
struct Space {
  std::string name;
  RingPtr ring;
  TotalClass tangent;
  int orientation = +1;
  std::string provenance;
};

// Eells-Salamon conjugation of a fiber subbundle: multiplies the tangent
// class by c(conjugate fiber)/c(fiber) and the orientation by
// (-1)^rank(fiber). The fiber must be a Whitney summand of the tangent
// class: the quotient tangent/fiber has to vanish above rank(tangent) -
// rank(fiber).
Space flip(const Space& space, const TotalClass& fiber);

// The 7 Chern numbers of a 5-fold, keyed by the partitions of 5.
struct ChernNumberTable {
  static constexpr int kCount = 7;
  // storage order: partitions (5),(4,1),(3,2),(3,1,1),(2,2,1),(2,1,1,1),(1^5)
  static const std::array<std::vector<int>, kCount>& partitions();
  static const std::array<const char*, kCount>& labels();
  // the row order used by the printed tables: c5, c1^5, c1^3c2, c1^2c3,
  // c1c4, c1c2^2, c2c3
  static const std::array<int, kCount>& display_order();

  std::array<Rational, kCount> values;

  const Rational& by_label(const std::string& label) const;
  bool all_integral() const;

  friend bool operator==(const ChernNumberTable& a, const ChernNumberTable& b) {
    return a.values == b.values;
  }
};

ChernNumberTable chern_numbers(const Space& space);

}  // namespace chern
