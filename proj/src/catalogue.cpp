#include "chern/catalogue.hpp"

#include <algorithm>

namespace chern {

namespace {

void verify(bool ok, const std::string& identity) {
  if (!ok) throw Error(Errc::check_failed, "catalogue verification failed: " + identity);
}

RingPresentation truncated_polynomial_ring(const std::string& name,
                                           const std::string& symbol,
                                           int top_degree) {
  RingPresentation p;
  p.name = name;
  p.generators = {{symbol, 2}};
  p.top_degree = top_degree;
  RewriteRule kill;
  kill.lhs = {static_cast<unsigned>(top_degree / 2 + 1)};
  p.rules.push_back(kill);  // g^(top/2+1) -> 0
  return p;
}

}  // namespace

bool Catalogue::has(const std::string& name) const {
  return std::any_of(spaces.begin(), spaces.end(),
                     [&](const Space& s) { return s.name == name; });
}

const Space& Catalogue::by_name(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name == name) return s;
  throw Error(Errc::unknown_symbol, "no catalogued space named " + name);
}

Catalogue build_standard_spaces() {
  Catalogue cat;

  // CP6: one generator H of degree 2, <H^6> = 1, class (1+H)^7.
  RingPresentation cp6p = truncated_polynomial_ring("H*(CP6)", "H", 12);
  cp6p.fundamental = {{Monomial{6}, Rational(1)}};
  RingPtr cp6_ring = Ring::make(cp6p);
  RingElement H = cp6_ring->generator("H");
  TotalClass c_cp6 =
      TotalClass::from_element(cp6_ring, 6, (cp6_ring->one() + H).pow(7));
  Space cp6{"CP6", cp6_ring, c_cp6, +1,
            "projective 6-space: class (1+H)^7, <H^6> = 1"};
  verify(cp6_ring->evaluate_top(c_cp6.part(6), +1) == Rational(7),
         "Euler characteristic of CP6 is 7");
  cat.spaces.push_back(cp6);

  // S6: orientation class x in degree 6, c3 = 2x, c1 = c2 = 0.
  RingPresentation s6p;
  s6p.name = "H*(S6)";
  s6p.generators = {{"x", 6}};
  s6p.top_degree = 6;
  s6p.rules.push_back({Monomial{2}, {}});  // x^2 -> 0
  s6p.fundamental = {{Monomial{1}, Rational(1)}};
  RingPtr s6_ring = Ring::make(s6p);
  RingElement x = s6_ring->generator("x");
  TotalClass c_s6 = TotalClass::from_parts(
      s6_ring, 3, {s6_ring->one(), s6_ring->zero(), s6_ring->zero(), Rational(2) * x});
  Space s6{"S6", s6_ring, c_s6, +1,
           "6-sphere with the invariant almost complex structure; c1 = c2 = 0 "
           "taken as input data, c3 = 2x from the Euler characteristic"};
  verify(s6_ring->evaluate_top(c_s6.part(3), +1) == Rational(2),
         "Euler characteristic of S6 is 2");
  cat.spaces.push_back(s6);

  // Q: adjunction for the degree-2 hypersurface in CP6. <h^5> = 2 and the
  // lattice generators above the middle degree are h^k/2.
  RingPresentation qp = truncated_polynomial_ring("H*(Q)", "h", 10);
  qp.fundamental = {{Monomial{5}, Rational(2)}};
  qp.lattice = {
      {6, {{{Rational(1, 2), Monomial{3}}}}},
      {8, {{{Rational(1, 2), Monomial{4}}}}},
      {10, {{{Rational(1, 2), Monomial{5}}}}},
  };
  RingPtr q_ring = Ring::make(qp);
  RingElement h = q_ring->generator("h");
  TotalClass ambient =
      TotalClass::from_element(q_ring, 6, (q_ring->one() + h).pow(7));
  TotalClass c_q = series_quotient(ambient, TotalClass::line(Rational(2) * h));
  {
    TotalClass expected = TotalClass::from_parts(
        q_ring, 5,
        {q_ring->one(), Rational(5) * h, Rational(11) * h.pow(2), Rational(13) * h.pow(3),
         Rational(9) * h.pow(4), Rational(3) * h.pow(5)});
    verify(c_q == expected, "adjunction gives c(Q) = 1+5h+11h^2+13h^3+9h^4+3h^5");
    TotalClass fiber = TotalClass::from_parts(
        q_ring, 2, {q_ring->one(), Rational(3) * h, Rational(3) * h.pow(2)});
    TotalClass horizontal = TotalClass::from_parts(
        q_ring, 3,
        {q_ring->one(), Rational(2) * h, Rational(2) * h.pow(2), h.pow(3)});
    verify(whitney(fiber, horizontal) == c_q,
           "c(Q) factorizes as (1+3h+3h^2)(1+2h+2h^2+h^3)");
  }
  Space q{"Q", q_ring, c_q, +1,
          "5-dimensional quadric: adjunction from CP6, fundamental class twice "
          "the ambient generator"};
  verify(q_ring->evaluate_top(c_q.part(5), +1) == Rational(6),
         "Euler characteristic of Q is 6");
  verify(q_ring->is_integral(c_q.as_element()), "c(Q) is integral");
  cat.spaces.push_back(q);

  // P(TS6) and P(T*S6): projectivize, twist the pulled-back bundle by the
  // hyperplane class, multiply with the pulled-back base tangent class.
  auto projectivized_sphere_space = [&](const std::string& name, bool dual) {
    TotalClass bundle = dual ? conjugate(c_s6) : c_s6;
    std::vector<RingElement> parts = {bundle.part(1), bundle.part(2), bundle.part(3)};
    RingPtr ring = projectivize(s6_ring, 3, parts, "y", "H*(" + name + ")");
    RingElement y = ring->generator("y");
    TotalClass pulled = TotalClass::from_parts(
        ring, 3,
        {ring->one(), pullback(ring, bundle.part(1)), pullback(ring, bundle.part(2)),
         pullback(ring, bundle.part(3))});
    // twisting the pulled-back bundle by the hyperplane class splits off a
    // trivial line, leaving the rank-2 vertical tangent bundle
    TotalClass twisted = twist_line(pulled, y);
    verify(twisted.part(3).is_zero(),
           "degree-3 part of the twisted bundle of " + name + " vanishes");
    TotalClass vertical = TotalClass::from_parts(
        ring, 2, {ring->one(), twisted.part(1), twisted.part(2)});
    TotalClass vertical_expected = TotalClass::from_parts(
        ring, 2, {ring->one(), Rational(3) * y, Rational(3) * y.pow(2)});
    verify(vertical == vertical_expected,
           "twisted vertical bundle of " + name + " is 1+3y+3y^2");
    TotalClass base_tangent = TotalClass::from_parts(
        ring, 3,
        {ring->one(), ring->zero(), ring->zero(), pullback(ring, c_s6.part(3))});
    TotalClass tangent = whitney(vertical, base_tangent);
    return Space{name, ring, tangent, +1,
                 "projectivization of the " + std::string(dual ? "co" : "") +
                     "tangent bundle of S6"};
  };
  Space pts6 = projectivized_sphere_space("PTS6", false);
  Space ptstar = projectivized_sphere_space("PTstarS6", true);
  {
    RingElement y = pts6.ring->generator("y");
    RingElement xx = pts6.ring->generator("x");
    verify(y.pow(3) == Rational(-2) * xx, "P(TS6) relation y^3 = -2x");
    RingElement y2 = ptstar.ring->generator("y");
    RingElement xx2 = ptstar.ring->generator("x");
    verify(y2.pow(3) == Rational(2) * xx2, "P(T*S6) relation y^3 = 2x");
    for (const Space* s : {&pts6, &ptstar}) {
      verify(s->ring->evaluate_top(s->tangent.part(5), +1) == Rational(6),
             "Euler characteristic of " + s->name + " is 6");
      verify(s->ring->is_integral(s->tangent.as_element()),
             "c(" + s->name + ") is integral");
    }
  }
  cat.spaces.push_back(pts6);
  cat.spaces.push_back(ptstar);

  // X: conjugate Q along the rank-2 fiber of the fibration over S6.
  TotalClass q_fiber = TotalClass::from_parts(
      q_ring, 2, {q_ring->one(), Rational(3) * h, Rational(3) * h.pow(2)});
  Space xspace = flip(q, q_fiber);
  xspace.name = "X";
  xspace.provenance = "flip of Q along the rank-2 fiber class 1+3h+3h^2";
  {
    TotalClass expected = TotalClass::from_parts(
        q_ring, 5,
        {q_ring->one(), -h, -h.pow(2), h.pow(3), Rational(3) * h.pow(4),
         Rational(3) * h.pow(5)});
    verify(xspace.tangent == expected, "c(X) = 1-h-h^2+h^3+3h^4+3h^5");
    verify(xspace.orientation == +1, "rank-2 flip preserves the orientation of Q");
  }
  cat.spaces.push_back(xspace);

  // Z: single generator L, lattice L^2/3, L^3/6, L^4/18, L^5/18, <L^5> = 18;
  // classes from the index-3 survivor of the rigidity scan.
  RingPresentation zp = truncated_polynomial_ring("H*(Z)", "L", 10);
  zp.fundamental = {{Monomial{5}, Rational(18)}};
  zp.lattice = {
      {4, {{{Rational(1, 3), Monomial{2}}}}},
      {6, {{{Rational(1, 6), Monomial{3}}}}},
      {8, {{{Rational(1, 18), Monomial{4}}}}},
      {10, {{{Rational(1, 18), Monomial{5}}}}},
  };
  RingPtr z_ring = Ring::make(zp);
  RingElement L = z_ring->generator("L");
  TotalClass c_z = TotalClass::from_parts(
      z_ring, 5,
      {z_ring->one(), Rational(3) * L, Rational(13, 3) * L.pow(2),
       Rational(11, 3) * L.pow(3), Rational(5, 3) * L.pow(4),
       Rational(1, 3) * L.pow(5)});
  Space z{"Z", z_ring, c_z, +1,
          "twistor space of the exceptional quaternionic base: classes of the "
          "index-3 structure, reproduced by the rigidity scan"};
  {
    auto [p1, p2] = pontryagin(c_z);
    verify(p1 == Rational(1, 3) * L.pow(2), "p1(Z) = 1/3 L^2");
    verify(p2 == Rational(1, 9) * L.pow(4), "p2(Z) = 1/9 L^4");
    verify(z_ring->evaluate_top(c_z.part(1) * c_z.part(4), +1) == Rational(90),
           "c1c4(Z) = 90");
    verify(z_ring->evaluate_top(c_z.part(5), +1) == Rational(6),
           "Euler characteristic of Z is 6");
    verify(z_ring->is_integral(c_z.as_element()), "c(Z) is integral");
    verify(z_ring->evaluate_top(todd(c_z)[5], +1) == Rational(1), "Todd genus of Z is 1");
    Rational deg = z_ring->evaluate_top(L.pow(5), +1);
    verify(deg / Rational(2) + Rational(1) == Rational(10), "genus <L^5>/2 + 1 = 10");
    verify(deg / Rational(2) + Rational(5) == Rational(14),
           "isometry dimension <L^5>/2 + 5 = 14");
  }
  cat.spaces.push_back(z);

  // N: conjugate Z along the rank-1 twistor fiber.
  Space n = flip(z, kobayashi_fiber(z));
  n.name = "N";
  n.provenance = "flip of Z along the rank-1 fiber class 1+L";
  {
    TotalClass expected = TotalClass::from_parts(
        z_ring, 5,
        {z_ring->one(), L, Rational(1, 3) * L.pow(2), -L.pow(3), -L.pow(4),
         Rational(-1, 3) * L.pow(5)});
    verify(n.tangent == expected, "c(N) = 1+L+1/3L^2-L^3-L^4-1/3L^5");
    verify(n.orientation == -1, "rank-1 flip reverses the orientation of Z");
    verify(z_ring->evaluate_top(n.tangent.part(5), n.orientation) == Rational(6),
           "Euler characteristic of N is 6");
  }
  cat.spaces.push_back(n);

  // consistency: the direct projectivization of the cotangent bundle agrees
  // with the fiber flip of P(TS6), up to the generator-sign symmetry
  {
    RingElement y = pts6.ring->generator("y");
    TotalClass tp = TotalClass::from_parts(
        pts6.ring, 2, {pts6.ring->one(), Rational(3) * y, Rational(3) * y.pow(2)});
    Space flipped = flip(pts6, tp);
    MatchReport m = match_up_to_symmetry(ptstar, flipped);
    verify(m.matched && m.orientation_agrees,
           "P(T*S6) agrees with the fiber flip of P(TS6)");
  }

  return cat;
}

TotalClass kobayashi_fiber(const Space& z) {
  RingElement c1 = z.tangent.part(1);
  RingElement third = Rational(1, 3) * c1;
  if (!z.ring->is_integral(third))
    throw Error(Errc::not_divisible, "c1 of " + z.name + " is not divisible by 3");
  return TotalClass::line(third);
}

namespace {

// Per-degree data for a ring whose rational cohomology is generated by its
// single degree-2 generator.
struct PowerLadder {
  RingElement gen;
  // nu[d/2]: g^(d/2) = nu * (basis monomial of degree d); every degree is
  // one-dimensional
  std::vector<Rational> nu;
};

PowerLadder ladder_of(const RingPtr& ring, const std::string& who) {
  const auto& gens = ring->presentation().generators;
  int deg2 = -1;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree == 2) {
      if (deg2 >= 0)
        throw Error(Errc::incomparable_presentations,
                    who + " has more than one degree-2 generator");
      deg2 = static_cast<int>(i);
    }
  }
  if (deg2 < 0)
    throw Error(Errc::incomparable_presentations, who + " has no degree-2 generator");
  PowerLadder out;
  out.gen = ring->generator(gens[static_cast<size_t>(deg2)].symbol);
  for (int d = 0; d <= ring->top_degree(); d += 2) {
    if (ring->dim(d) != 1)
      throw Error(Errc::incomparable_presentations,
                  who + " is not one-dimensional in degree " + std::to_string(d));
    RingElement p = out.gen.pow(static_cast<unsigned>(d / 2));
    const Rational& c = p.components()[static_cast<size_t>(d / 2)][0];
    if (c.is_zero())
      throw Error(Errc::incomparable_presentations,
                  who + ": generator power vanishes in degree " + std::to_string(d));
    out.nu.push_back(c);
  }
  return out;
}

RingElement transport_power_basis(const RingElement& e, const PowerLadder& src,
                                  const PowerLadder& tgt, const RingPtr& tgt_ring,
                                  int sign) {
  RingElement out = tgt_ring->zero();
  for (size_t di = 0; di < e.components().size(); ++di) {
    const Rational& c = e.components()[di][0];
    if (c.is_zero()) continue;
    Rational factor = c / src.nu[di] * tgt.nu[di];
    if (di % 2 == 1 && sign < 0) factor = -factor;
    out += tgt_ring->monomial_element(tgt_ring->basis(static_cast<int>(di) * 2)[0],
                                      factor);
  }
  return out;
}

}  // namespace

MatchReport match_up_to_symmetry(const Space& a, const Space& b) {
  MatchReport rep;
  rep.source = a.name;
  rep.target = b.name;
  if (a.ring->top_degree() != b.ring->top_degree())
    throw Error(Errc::incomparable_presentations,
                "spaces have different truncation degrees");
  PowerLadder src = ladder_of(a.ring, a.name);
  PowerLadder tgt = ladder_of(b.ring, b.name);
  const int dim = a.ring->top_degree() / 2;

  auto transport_class = [&](const TotalClass& t, int sign) {
    std::vector<RingElement> parts;
    for (int k = 0; k <= t.top_index(); ++k)
      parts.push_back(transport_power_basis(t.part(k), src, tgt, b.ring, sign));
    return TotalClass::from_parts(b.ring, t.rank(), parts);
  };

  for (bool conj : {false, true}) {
    for (int sign : {+1, -1}) {
      TotalClass image = transport_class(a.tangent, sign);
      if (conj) image = conjugate(image);
      if (image == b.tangent) {
        rep.matched = true;
        rep.generator_sign = sign;
        rep.globally_conjugated = conj;
        // compare the transported fundamental functional: the pairing value
        // of the source top monomial must be reproduced in the target
        RingElement m_src = a.ring->monomial_element(a.ring->basis(a.ring->top_degree())[0]);
        Rational value_src = a.ring->evaluate_top(m_src, a.orientation);
        if (conj && dim % 2 == 1) value_src = -value_src;
        RingElement image_m = transport_power_basis(m_src, src, tgt, b.ring, sign);
        Rational value_tgt = b.ring->evaluate_top(image_m, b.orientation);
        rep.orientation_agrees = (value_src == value_tgt);
        return rep;
      }
    }
  }
  return rep;
}

Figure3Report figure3_square(const Catalogue& cat, const RingElement& t) {
  const Space& q = cat.by_name("Q");
  if (t.ring().get() != q.ring.get())
    throw Error(Errc::ring_mismatch, "vertical class must live in the ring of Q");
  if (!t.is_homogeneous(2))
    throw Error(Errc::inhomogeneous_class, "vertical class must have degree 2");

  RingElement h = q.ring->generator("h");
  TotalClass sphere_fiber = TotalClass::from_parts(
      q.ring, 2, {q.ring->one(), Rational(3) * h, Rational(3) * h.pow(2)});

  // t = 0 degenerates the vertical conjugation to an orientation reversal
  auto vertical_flip = [&](const Space& s) {
    if (t.is_zero()) {
      Space out = s;
      out.orientation = -s.orientation;
      out.provenance = "orientation reversal (vertical class 0)";
      return out;
    }
    return flip(s, TotalClass::line(t));
  };

  Figure3Report rep;
  rep.corner_q = q;
  rep.corner_a = flip(q, sphere_fiber);
  rep.corner_a.name = "flip(Q over S6)";
  rep.corner_b = vertical_flip(q);
  rep.corner_b.name = "flip(Q over M)";
  rep.corner_c = vertical_flip(rep.corner_a);
  rep.corner_c.name = "flip(flip(Q over S6) over M)";
  rep.corner_d = flip(rep.corner_b, sphere_fiber);
  rep.corner_d.name = "flip(flip(Q over M) over S6)";
  rep.commutes = rep.corner_c.tangent == rep.corner_d.tangent &&
                 rep.corner_c.orientation == rep.corner_d.orientation;

  auto best_match = [&](const Space& corner, std::string& into) {
    for (const auto& candidate : cat.spaces) {
      if (candidate.ring->top_degree() != 10) continue;
      MatchReport m = match_up_to_symmetry(corner, candidate);
      m.source = corner.name;
      if (m.matched && m.orientation_agrees) {
        into = candidate.name;
        rep.reports.push_back(m);
        return;
      }
    }
    into.clear();
  };
  best_match(rep.corner_q, rep.match_q);
  best_match(rep.corner_a, rep.match_a);
  best_match(rep.corner_b, rep.match_b);
  best_match(rep.corner_c, rep.match_cd);
  return rep;
}

}  // namespace chern
