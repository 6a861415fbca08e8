#pragma once

#include <string>
#include <vector>

#include "chern/total_class.hpp"

namespace chern {

struct Catalogue {
  std::vector<Space> spaces;

  bool has(const std::string& name) const;
  const Space& by_name(const std::string& name) const;
};

// Constructs the named spaces from first principles: CP6 with class (1+H)^7,
// S6 with class 1+2x, Q by adjunction from CP6, P(TS6) and P(T*S6) by
// projectivization + line twist + Whitney product, X and N as fiber flips of
// Q and Z, and Z from its index-3 classes. Every construction is verified
// against an independent route where one exists; a failed identity aborts
// with Errc::check_failed naming the identity.
Catalogue build_standard_spaces();

// Rank-1 class 1 + c1/3 of the twistor-fiber tangent bundle; requires c1
// divisible by 3 in the lattice.
TotalClass kobayashi_fiber(const Space& z);

// Result of comparing two spaces up to the symmetries that relabel a
// single-degree-2-generator ring: generator sign and global conjugation.
struct MatchReport {
  std::string source;
  std::string target;
  int generator_sign = +1;
  bool globally_conjugated = false;
  bool orientation_agrees = false;
  bool matched = false;
};

// Searches sign x conjugation, transporting the source tangent class through
// the ring morphism g -> sign*g (the images of all monomials follow from the
// relations) and comparing with the target componentwise.
MatchReport match_up_to_symmetry(const Space& a, const Space& b);

struct Figure3Report {
  Space corner_q;   // Q itself
  Space corner_a;   // flip of Q along the rank-2 fiber over S6
  Space corner_b;   // flip of Q along the rank-1 vertical class 1+t
  Space corner_c;   // vertical flip after horizontal
  Space corner_d;   // horizontal flip after vertical
  bool commutes = false;
  // catalogued space matched by each corner (empty when none matches)
  std::string match_q, match_a, match_b, match_cd;
  std::vector<MatchReport> reports;
};

// Conjugation square over the vertical fiber class 1+t: both composition
// orders of the two fiber flips must land on the same space. t = 0
// degenerates the vertical flips to orientation reversals.
Figure3Report figure3_square(const Catalogue& cat, const RingElement& t);

}  // namespace chern
