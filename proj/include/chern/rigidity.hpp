#pragma once

#include <string>
#include <vector>

#include "chern/ring.hpp"

namespace chern::rigidity {

// Homeomorphism-invariant data of the twistor manifold: its cohomology ring
// with lattice, the integral Pontryagin classes, the Hodge-determined value
// of c1c4, and the ring-exclusion facts used to prune positive indices.
struct TopologicalInput {
  RingPtr ring;
  RingElement p1;
  RingElement p2;
  long c1c4_value = 90;
  bool spin = false;
  bool quadric_ring_excluded = true;
  bool cp5_ring_excluded = true;
};

// The standard input: the Z-ring with p1 = L^2/3 and p2 = L^4/9.
TopologicalInput standard_input();

enum class FailReason {
  none,
  todd_vs_pontryagin_mismatch,
  integrality_failure,
  mod27_obstruction,
  index_bound_excluded,
};

const char* fail_reason_name(FailReason r);

struct CaseReport {
  long d = 0;
  RingElement c2;
  RingElement c4;
  RingElement c1c3;      // from the p2 relation
  RingElement c3;        // c1c3 / (d L)
  Rational todd_rhs;     // <c1^2 c3> required by the Todd-genus relation
  Rational pontryagin_lhs;  // <c1^2 c3> from the p2 route
  bool pass = false;
  FailReason reason = FailReason::none;
  std::vector<std::string> notes;  // disagreements with previously tabulated values
};

// Fano-index candidates: odd divisors of c1c4 (even ones too when spin),
// negatives unrestricted, positives cut by the index bound dim+1 and the
// quadric / projective-space ring exclusions. Ordered positives first.
std::vector<long> candidate_set(const TopologicalInput& t);

// positive divisors removed by the bound or the ring exclusions
std::vector<std::pair<long, FailReason>> pruned_positive_divisors(
    const TopologicalInput& t);

// Derives c2 = (c1^2 - p1)/2, c4 from <c1 c4>, c1c3 from the p2 relation,
// then applies, in order: the mod-27 obstruction when 9 | d, the lattice
// divisibility of c1c3 by d, and the equality of the two routes to
// <c1^2 c3>.
CaseReport case_check(long d, const TopologicalInput& t);

struct ScanResult {
  std::vector<CaseReport> reports;
  std::vector<long> survivors;
};

ScanResult scan(const TopologicalInput& t);

}  // namespace chern::rigidity
