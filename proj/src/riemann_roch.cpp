#include "chern/riemann_roch.hpp"

namespace chern {

UniPoly hilbert_polynomial(const Space& space, const RingElement& line) {
  if (space.ring->top_degree() != 10)
    throw Error(Errc::invalid_presentation,
                "Hilbert polynomial needs truncation index 5");
  if (!line.is_homogeneous(2) || line.is_zero())
    throw Error(Errc::inhomogeneous_class, "polarization must have degree 2");
  bool generates = false;
  for (const RingElement& g : space.ring->lattice_generators(2))
    if (line == g || line == -g) generates = true;
  if (!generates)
    throw Error(Errc::invalid_presentation,
                "polarization must be a degree-2 lattice generator");

  std::vector<RingElement> td = todd(space.tangent);
  std::vector<Rational> coeffs;
  RingElement power = space.ring->one();
  Rational inv_fact(1);
  for (int k = 0; k <= 5; ++k) {
    if (k > 0) {
      power = power * line;
      inv_fact /= Rational(k);
    }
    coeffs.push_back(inv_fact * space.ring->evaluate_top(
                                    power * td[static_cast<size_t>(5 - k)],
                                    space.orientation));
  }
  return UniPoly(std::move(coeffs));
}

UniPoly hilbert_polynomial(const Polarization& p) {
  return hilbert_polynomial(p.space, p.line_class);
}

ProductFormComparison compare_with_product_form(const UniPoly& p) {
  ProductFormComparison out;
  const std::pair<Rational, Rational> factors[] = {
      {Rational(1), Rational(2)}, {Rational(3), Rational(5)}, {Rational(2), Rational(3)},
      {Rational(3), Rational(4)}, {Rational(1), Rational(1)}};
  out.product_form =
      UniPoly::expand_linear_factors(factors).scaled(Rational(1, 120));
  out.equal = (p == out.product_form);
  int top = std::max(p.degree(), out.product_form.degree());
  for (int k = 0; k <= top; ++k)
    if (p.coeff(k) != out.product_form.coeff(k)) out.differing_degrees.push_back(k);
  return out;
}

ChernDataReport extract_chern_data(const UniPoly& p, const Space& space) {
  ChernDataReport rep;
  // c1 = m * g for the degree-2 lattice generator g
  const RingElement& g = space.ring->lattice_generators(2).front();
  RingElement c1 = space.tangent.part(1);
  const Rational& gc = g.components()[1][0];
  const Rational& cc = c1.components()[1][0];
  if (gc.is_zero())
    throw Error(Errc::invalid_presentation, "degenerate degree-2 lattice");
  rep.c1_multiplier = cc / gc;
  const Rational& m = rep.c1_multiplier;

  rep.c15_from_r5 = p.coeff(5) * Rational(120) * m.pow(5);
  rep.c15_from_r4 = p.coeff(4) * Rational(48) * m.pow(4);
  rep.r4_consistent = (rep.c15_from_r5 == rep.c15_from_r4);
  rep.c13c2 = p.coeff(3) * Rational(72) * m.pow(3) - rep.c15_from_r5;
  return rep;
}

}  // namespace chern
