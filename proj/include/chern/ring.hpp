#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

// Exponent vector aligned with a ring's generator list.
using Monomial = std::vector<unsigned>;

struct GeneratorSpec {
  std::string symbol;
  int degree = 0;  // even, positive
};

// A linear combination of monomials, used before a ring exists.
using MonomialCombo = std::vector<std::pair<Rational, Monomial>>;

// An oriented rule: whenever `lhs` divides a monomial, the matched part is
// replaced by `rhs`. Degree-homogeneous by validation.
struct RewriteRule {
  Monomial lhs;
  MonomialCombo rhs;
};

// Finitely presented graded-commutative ring concentrated in even degrees,
// truncated above top_degree, with an explicit integral lattice per degree
// and a fundamental-class evaluation on the top-degree basis.
struct RingPresentation {
  std::string name;
  std::vector<GeneratorSpec> generators;
  std::vector<RewriteRule> rules;
  int top_degree = 0;
  // per-degree lattice generators; degrees without an entry default to the
  // basis monomials of that degree
  std::vector<std::pair<int, std::vector<MonomialCombo>>> lattice;
  // pairing of each top-degree basis monomial with the fundamental class in
  // the ring's reference orientation
  std::vector<std::pair<Monomial, Rational>> fundamental;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class RingElement {
 public:
  RingElement() = default;

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  // coefficient vectors indexed by degree/2, aligned with basis monomials
  const std::vector<std::vector<Rational>>& components() const { return comps_; }

  // the component of the given even degree, as an element
  RingElement part(int degree) const;
  // true when all nonzero coefficients sit in the given degree
  bool is_homogeneous(int degree) const;
  // -1 for zero, else the highest degree with a nonzero coefficient
  int top_nonzero_degree() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Rational& s, RingElement a);
  RingElement pow(unsigned e) const;

  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  friend class Ring;
  RingPtr ring_;
  std::vector<std::vector<Rational>> comps_;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  // Validates the presentation: even positive generator degrees,
  // degree-homogeneous rules, rewriting that terminates and is confluent on
  // all basis products, a complete top-degree evaluation table, and lattice
  // generators spanning each degree. Throws Error with a distinct code per
  // failure.
  static RingPtr make(RingPresentation p);

  const RingPresentation& presentation() const { return pres_; }
  const std::string& name() const { return pres_.name; }
  int top_degree() const { return pres_.top_degree; }
  int degree_count() const { return pres_.top_degree / 2 + 1; }

  int dim(int degree) const;
  const std::vector<Monomial>& basis(int degree) const;
  std::string monomial_name(const Monomial& m) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement generator(const std::string& symbol) const;
  // normal form of a scalar multiple of a monomial
  RingElement monomial_element(const Monomial& m, const Rational& c = Rational(1)) const;
  RingElement element(const MonomialCombo& combo) const;
  RingElement scalar(const Rational& c) const;

  Rational evaluate_top(const RingElement& e, int orientation) const;
  bool is_integral(const RingElement& e) const;
  const std::vector<RingElement>& lattice_generators(int degree) const;

  // cached normal form of a product of two basis monomials
  RingElement product_of_basis(const Monomial& a, const Monomial& b) const;

  // maps a monomial of `src`'s ring into this ring by generator name;
  // every generator of the source must exist here with the same degree
  RingElement transport_by_name(const RingElement& src) const;

  bool structurally_equal(const Ring& o) const;

 private:
  Ring() = default;

  int degree_of(const Monomial& m) const;
  // normal form as coefficients over the basis; checked against `fuel`
  std::vector<std::vector<Rational>> normalize(const MonomialCombo& combo,
                                               long* fuel) const;
  void build_basis();
  void validate_and_finish();

  RingPresentation pres_;
  std::vector<std::vector<Monomial>> basis_;          // per degree index
  std::map<Monomial, std::pair<int, int>> basis_pos_; // monomial -> (deg idx, col)
  std::vector<std::vector<RingElement>> lattice_;     // per degree index
  std::vector<Rational> fundamental_;                 // aligned with top basis
  // cached normal forms of pairwise basis products
  std::map<std::pair<Monomial, Monomial>, std::vector<std::vector<Rational>>> products_;
};

// Ring of the projectivization of a bundle with the given total Chern class
// parts c_1..c_rank (elements of `base`, c_i homogeneous of degree 2i). The
// new degree-2 generator `fiber_symbol` satisfies the Grothendieck relation
//   y^rank = -sum_i c_i y^{rank-i},
// the basis is {b y^j : j < rank}, top degree grows by 2(rank-1), the
// lattice is the basis monomials, and <b_top y^{rank-1}> = <b_top>_base.
RingPtr projectivize(const RingPtr& base, int rank,
                     const std::vector<RingElement>& chern_parts,
                     const std::string& fiber_symbol,
                     const std::string& name = "");

// base element, viewed in a ring that contains the base generators by name
RingElement pullback(const RingPtr& target, const RingElement& base_element);

}  // namespace chern
