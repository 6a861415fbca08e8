#pragma once

#include <vector>

#include "chern/total_class.hpp"
#include "chern/unipoly.hpp"

namespace chern {

// A space polarized by a degree-2 lattice generator.
struct Polarization {
  Space space;
  RingElement line_class;
};

// Euler characteristic of powers of the polarizing line bundle as an exact
// polynomial in r: the r^k coefficient is <line^k/k! * td_{5-k}> in the
// space's orientation. The line class must be a degree-2 lattice generator
// up to sign.
UniPoly hilbert_polynomial(const Space& space, const RingElement& line);
UniPoly hilbert_polynomial(const Polarization& p);

struct ProductFormComparison {
  UniPoly product_form;  // (r+2)(3r+5)(2r+3)(3r+4)(r+1)/120 expanded
  bool equal = false;
  std::vector<int> differing_degrees;
};

ProductFormComparison compare_with_product_form(const UniPoly& p);

// Chern numbers recovered from the leading Hilbert coefficients; m is the
// divisibility of c1 (c1 = m * lattice generator).
struct ChernDataReport {
  Rational c1_multiplier;    // m
  Rational c15_from_r5;      // 5! m^5 * coeff(r^5)
  Rational c15_from_r4;      // 2 * 4! m^4 * coeff(r^4)
  bool r4_consistent = false;
  Rational c13c2;            // 12 * 3! m^3 * coeff(r^3) - c1^5
};

ChernDataReport extract_chern_data(const UniPoly& p, const Space& space);

}  // namespace chern
