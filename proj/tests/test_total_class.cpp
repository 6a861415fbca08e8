#include "chern/total_class.hpp"

#include "chern/prng.hpp"
#include "doctest.h"

using namespace chern;

namespace {

RingPtr make_q_ring() {
  RingPresentation p;
  p.name = "H*(Q)";
  p.generators = {{"h", 2}};
  p.top_degree = 10;
  p.rules.push_back({Monomial{6}, {}});
  p.fundamental = {{Monomial{5}, Rational(2)}};
  p.lattice = {
      {6, {{{Rational(1, 2), Monomial{3}}}}},
      {8, {{{Rational(1, 2), Monomial{4}}}}},
      {10, {{{Rational(1, 2), Monomial{5}}}}},
  };
  return Ring::make(p);
}

RingPtr make_z_ring() {
  RingPresentation p;
  p.name = "H*(Z)";
  p.generators = {{"L", 2}};
  p.top_degree = 10;
  p.rules.push_back({Monomial{6}, {}});
  p.fundamental = {{Monomial{5}, Rational(18)}};
  p.lattice = {
      {4, {{{Rational(1, 3), Monomial{2}}}}},
      {6, {{{Rational(1, 6), Monomial{3}}}}},
      {8, {{{Rational(1, 18), Monomial{4}}}}},
      {10, {{{Rational(1, 18), Monomial{5}}}}},
  };
  return Ring::make(p);
}

RingPtr make_pts6_ring() {
  RingPresentation p;
  p.name = "H*(PTS6)";
  p.generators = {{"x", 6}, {"y", 2}};
  p.top_degree = 10;
  p.rules.push_back({Monomial{2, 0}, {}});
  p.rules.push_back({Monomial{0, 3}, {{Rational(-2), Monomial{1, 0}}}});
  p.fundamental = {{Monomial{1, 2}, Rational(1)}};
  return Ring::make(p);
}

RingPtr universal_ring() {
  RingPresentation p;
  p.name = "universal";
  p.generators = {{"u1", 2}, {"u2", 4}, {"u3", 6}, {"u4", 8}, {"u5", 10}};
  p.top_degree = 10;
  for (const Monomial& m : std::vector<Monomial>{
           {5, 0, 0, 0, 0}, {3, 1, 0, 0, 0}, {2, 0, 1, 0, 0}, {1, 2, 0, 0, 0},
           {1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 0, 1}})
    p.fundamental.emplace_back(m, Rational(1));
  return Ring::make(p);
}

TotalClass powers_class(const RingPtr& ring, int rank, const RingElement& g,
                        std::vector<Rational> coeffs) {
  std::vector<RingElement> parts = {ring->one()};
  for (size_t k = 1; k <= 5 && k <= coeffs.size(); ++k)
    parts.push_back(coeffs[k - 1] * g.pow(static_cast<unsigned>(k)));
  return TotalClass::from_parts(ring, rank, parts);
}

TotalClass c_of_z(const RingPtr& z_ring) {
  return powers_class(z_ring, 5, z_ring->generator("L"),
                      {Rational(3), Rational(13, 3), Rational(11, 3), Rational(5, 3),
                       Rational(1, 3)});
}

TotalClass random_class(Prng& rng, const RingPtr& ring, int rank) {
  std::vector<RingElement> parts = {ring->one()};
  for (int k = 1; k <= ring->top_degree() / 2; ++k) {
    MonomialCombo combo;
    for (const Monomial& m : ring->basis(2 * k)) combo.emplace_back(rng.rational(9, 6), m);
    parts.push_back(ring->element(combo));
  }
  return TotalClass::from_parts(ring, rank, parts);
}

// a class that vanishes above its rank, as the class of a bundle does
TotalClass random_bundle(Prng& rng, const RingPtr& ring, int rank) {
  std::vector<RingElement> parts = {ring->one()};
  for (int k = 1; k <= ring->top_degree() / 2; ++k) {
    if (k > rank) {
      parts.push_back(ring->zero());
      continue;
    }
    MonomialCombo combo;
    for (const Monomial& m : ring->basis(2 * k)) combo.emplace_back(rng.rational(9, 6), m);
    parts.push_back(ring->element(combo));
  }
  return TotalClass::from_parts(ring, rank, parts);
}

}  // namespace

TEST_CASE("whitney products") {
  RingPtr q = make_q_ring();
  RingElement h = q->generator("h");
  TotalClass fiber = powers_class(q, 2, h, {Rational(3), Rational(3)});
  TotalClass horiz = powers_class(q, 3, h, {Rational(2), Rational(2), Rational(1)});
  TotalClass cq = powers_class(q, 5, h,
                               {Rational(5), Rational(11), Rational(13), Rational(9),
                                Rational(3)});
  CHECK(whitney(fiber, horiz) == cq);
  CHECK(whitney(cq, TotalClass::unit(q)) == cq);
  CHECK(whitney(fiber, horiz).rank() == 5);
}

TEST_CASE("whitney product in the projectivized ring") {
  RingPtr pr = make_pts6_ring();
  RingElement x = pr->generator("x");
  RingElement y = pr->generator("y");
  TotalClass a = TotalClass::from_parts(
      pr, 3, {pr->one(), Rational(3) * y, Rational(3) * y.pow(2), pr->zero()});
  TotalClass b = TotalClass::from_parts(
      pr, 3, {pr->one(), pr->zero(), pr->zero(), Rational(2) * x});
  TotalClass product = whitney(a, b);
  CHECK(product.part(1) == Rational(3) * y);
  CHECK(product.part(2) == Rational(3) * y.pow(2));
  CHECK(product.part(3) == Rational(2) * x);
  CHECK(product.part(4) == Rational(6) * (x * y));
  CHECK(product.part(5) == Rational(6) * (x * y.pow(2)));
}

TEST_CASE("series quotient solves the adjunction relation") {
  RingPtr q = make_q_ring();
  RingElement h = q->generator("h");
  TotalClass ambient = TotalClass::from_element(q, 6, (q->one() + h).pow(7));
  TotalClass quotient = series_quotient(ambient, TotalClass::line(Rational(2) * h));
  TotalClass cq = powers_class(q, 5, h,
                               {Rational(5), Rational(11), Rational(13), Rational(9),
                                Rational(3)});
  CHECK(quotient == cq);
  CHECK(quotient.rank() == 5);
  CHECK(series_quotient(cq, cq) == TotalClass::unit(q, 0));
}

TEST_CASE("series quotient long division oracle") {
  // (1-L)/(1+L) by long division: 1 - 2L + 2L^2 - 2L^3 + 2L^4 - 2L^5
  RingPtr z = make_z_ring();
  RingElement L = z->generator("L");
  TotalClass num = TotalClass::line(-L);
  TotalClass den = TotalClass::line(L);
  TotalClass ratio = series_quotient(num, den);
  TotalClass expected = powers_class(z, 0, L,
                                     {Rational(-2), Rational(2), Rational(-2), Rational(2),
                                      Rational(-2)});
  CHECK(ratio == expected);
}

TEST_CASE("whitney and quotient round-trip on random classes") {
  Prng rng(5);
  RingPtr rings[] = {make_q_ring(), make_z_ring(), make_pts6_ring()};
  for (const RingPtr& ring : rings)
    for (int i = 0; i < 60; ++i) {
      TotalClass a = random_class(rng, ring, static_cast<int>(rng.uniform(0, 5)));
      TotalClass b = random_class(rng, ring, static_cast<int>(rng.uniform(0, 5)));
      CHECK(series_quotient(whitney(a, b), b) == a);
    }
}

TEST_CASE("conjugation") {
  RingPtr q = make_q_ring();
  RingElement h = q->generator("h");
  TotalClass fiber = powers_class(q, 2, h, {Rational(3), Rational(3)});
  TotalClass conj = conjugate(fiber);
  CHECK(conj.part(1) == Rational(-3) * h);
  CHECK(conj.part(2) == Rational(3) * h.pow(2));
  RingPtr z = make_z_ring();
  TotalClass cz = c_of_z(z);
  TotalClass ccz = conjugate(cz);
  RingElement L = z->generator("L");
  CHECK(ccz.part(1) == Rational(-3) * L);
  CHECK(ccz.part(2) == Rational(13, 3) * L.pow(2));
  CHECK(ccz.part(3) == Rational(-11, 3) * L.pow(3));
  CHECK(ccz.part(4) == Rational(5, 3) * L.pow(4));
  CHECK(ccz.part(5) == Rational(-1, 3) * L.pow(5));
  Prng rng(9);
  for (int i = 0; i < 120; ++i) {
    TotalClass a = random_class(rng, z, 5);
    CHECK(conjugate(conjugate(a)) == a);
  }
}

TEST_CASE("line twist") {
  RingPtr pr = make_pts6_ring();
  RingElement x = pr->generator("x");
  RingElement y = pr->generator("y");
  // rank 3, c = 1 + 2x, twisted by y: the degree-3 part y^3 + 2x dies in
  // this ring
  TotalClass pulled = TotalClass::from_parts(
      pr, 3, {pr->one(), pr->zero(), pr->zero(), Rational(2) * x});
  TotalClass twisted = twist_line(pulled, y);
  CHECK(twisted.part(1) == Rational(3) * y);
  CHECK(twisted.part(2) == Rational(3) * y.pow(2));
  CHECK(twisted.part(3).is_zero());
  CHECK(twisted.rank() == 3);

  SUBCASE("twist by zero is the identity") {
    CHECK(twist_line(pulled, pr->zero()) == pulled);
  }
  SUBCASE("line bundles add first Chern classes") {
    TotalClass line = TotalClass::line(Rational(4) * y);
    TotalClass shifted = twist_line(line, y);
    CHECK(shifted.part(1) == Rational(5) * y);
    CHECK(shifted.rank() == 1);
  }
  SUBCASE("twist inverse on random bundle classes") {
    Prng rng(31);
    RingPtr z = make_z_ring();
    for (int i = 0; i < 120; ++i) {
      TotalClass a = random_bundle(rng, z, static_cast<int>(rng.uniform(0, 5)));
      RingElement t = rng.rational(7, 4) * z->generator("L");
      CHECK(twist_line(twist_line(a, t), -t) == a);
    }
  }
  SUBCASE("inhomogeneous twist class is rejected") {
    try {
      twist_line(pulled, pr->one());
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::inhomogeneous_class);
    }
  }
}

TEST_CASE("pontryagin classes") {
  RingPtr z = make_z_ring();
  RingElement L = z->generator("L");
  auto [p1, p2] = pontryagin(c_of_z(z));
  CHECK(p1 == Rational(1, 3) * L.pow(2));
  CHECK(p2 == Rational(1, 9) * L.pow(4));

  RingPtr q = make_q_ring();
  RingElement h = q->generator("h");
  TotalClass cq = powers_class(q, 5, h,
                               {Rational(5), Rational(11), Rational(13), Rational(9),
                                Rational(3)});
  auto [p1q, p2q] = pontryagin(cq);
  CHECK(p1q == Rational(3) * h.pow(2));
  // 11^2 - 2*5*13 + 2*9 = 9 by direct expansion
  CHECK(p2q == Rational(9) * h.pow(4));

  Prng rng(13);
  for (int i = 0; i < 120; ++i) {
    TotalClass a = random_class(rng, z, 5);
    CHECK(pontryagin(conjugate(a)) == pontryagin(a));
  }
}

TEST_CASE("chern character") {
  RingPtr z = make_z_ring();
  RingElement L = z->generator("L");
  TotalClass cz = c_of_z(z);
  auto ch = chern_character(cz);
  CHECK(ch[0] == z->scalar(Rational(5)));
  CHECK(ch[1] == Rational(3) * L);
  CHECK(ch[2] == Rational(1, 6) * L.pow(2));
  CHECK(ch[2] != Rational(1, 2) * L.pow(2));
  auto [p1, p2] = pontryagin(cz);
  CHECK(ch[2] == Rational(1, 2) * p1);
  TotalClass trivial = TotalClass::unit(z, 4);
  auto cht = chern_character(trivial);
  CHECK(cht[0] == z->scalar(Rational(4)));
  for (int k = 1; k <= 5; ++k) CHECK(cht[static_cast<size_t>(k)].is_zero());
}

TEST_CASE("todd class") {
  RingPtr u = universal_ring();
  TotalClass c = TotalClass::from_parts(
      u, 5,
      {u->one(), u->generator("u1"), u->generator("u2"), u->generator("u3"),
       u->generator("u4"), u->generator("u5")});
  auto td = todd(c);
  RingElement u1 = u->generator("u1"), u2 = u->generator("u2"), u3 = u->generator("u3"),
              u4 = u->generator("u4");
  CHECK(td[0] == u->one());
  CHECK(td[1] == Rational(1, 2) * u1);
  CHECK(td[2] == Rational(1, 12) * (u1 * u1 + u2));
  CHECK(td[3] == Rational(1, 24) * (u1 * u2));
  // the degree-5 polynomial over Chern monomials
  RingElement expected5 =
      Rational(1, 1440) * (-(u1.pow(3) * u2) + u1.pow(2) * u3 +
                           Rational(3) * (u1 * u2 * u2) - u1 * u4);
  CHECK(td[5] == expected5);

  RingPtr z = make_z_ring();
  CHECK(z->evaluate_top(todd(c_of_z(z))[5], +1) == Rational(1));

  Prng rng(17);
  for (int i = 0; i < 120; ++i) {
    TotalClass a = random_class(rng, z, static_cast<int>(rng.uniform(0, 5)));
    CHECK(todd(a)[1] == Rational(1, 2) * a.part(1));
  }
}

TEST_CASE("newton identities round-trip") {
  RingPtr u = universal_ring();
  TotalClass c = TotalClass::from_parts(
      u, 5,
      {u->one(), u->generator("u1"), u->generator("u2"), u->generator("u3"),
       u->generator("u4"), u->generator("u5")});
  CHECK(chern_from_power_sums(u, 5, power_sums(c, 5)) == c);
  Prng rng(19);
  RingPtr z = make_z_ring();
  for (int i = 0; i < 120; ++i) {
    TotalClass a = random_class(rng, z, 5);
    CHECK(chern_from_power_sums(z, 5, power_sums(a, 5)) == a);
  }
}

TEST_CASE("flips") {
  RingPtr q = make_q_ring();
  RingElement h = q->generator("h");
  TotalClass cq = powers_class(q, 5, h,
                               {Rational(5), Rational(11), Rational(13), Rational(9),
                                Rational(3)});
  Space qs{"Q", q, cq, +1, ""};

  SUBCASE("flip of Q along 1+3h+3h^2") {
    TotalClass fiber = powers_class(q, 2, h, {Rational(3), Rational(3)});
    Space x = flip(qs, fiber);
    TotalClass expected = powers_class(q, 5, h,
                                       {Rational(-1), Rational(-1), Rational(1), Rational(3),
                                        Rational(3)});
    CHECK(x.tangent == expected);
    CHECK(x.orientation == +1);
    // flipping back with the conjugate fiber undoes the flip
    Space back = flip(x, conjugate(fiber));
    CHECK(back.tangent == cq);
    CHECK(back.orientation == +1);
  }
  SUBCASE("flip of Z along 1+L") {
    RingPtr z = make_z_ring();
    RingElement L = z->generator("L");
    Space zs{"Z", z, c_of_z(z), +1, ""};
    Space n = flip(zs, TotalClass::line(L));
    TotalClass expected = powers_class(z, 5, L,
                                       {Rational(1), Rational(1, 3), Rational(-1),
                                        Rational(-1), Rational(-1, 3)});
    CHECK(n.tangent == expected);
    CHECK(n.orientation == -1);
    Space back = flip(n, TotalClass::line(-L));
    CHECK(back.tangent == zs.tangent);
    CHECK(back.orientation == +1);
  }
  SUBCASE("a non-summand fiber is rejected") {
    TotalClass bad = powers_class(q, 2, h, {Rational(1), Rational(3)});
    try {
      flip(qs, bad);
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_a_summand);
      CHECK(std::string(e.what()) == "fiber is not a summand");
    }
  }
}

TEST_CASE("chern numbers of the catalogued classes") {
  RingPtr z_ring = make_z_ring();
  Space z{"Z", z_ring, c_of_z(z_ring), +1, ""};
  ChernNumberTable t = chern_numbers(z);
  CHECK(t.by_label("c5") == Rational(6));
  CHECK(t.by_label("c1^5") == Rational(4374));
  CHECK(t.by_label("c1^3c2") == Rational(2106));
  CHECK(t.by_label("c1^2c3") == Rational(594));
  CHECK(t.by_label("c1c4") == Rational(90));
  CHECK(t.by_label("c1c2^2") == Rational(1014));
  CHECK(t.by_label("c2c3") == Rational(286));

  RingPtr pr = make_pts6_ring();
  RingElement x = pr->generator("x");
  RingElement y = pr->generator("y");
  TotalClass cp = TotalClass::from_parts(
      pr, 5,
      {pr->one(), Rational(3) * y, Rational(3) * y.pow(2), Rational(2) * x,
       Rational(6) * (x * y), Rational(6) * (x * y.pow(2))});
  ChernNumberTable tp = chern_numbers(Space{"PTS6", pr, cp, +1, ""});
  CHECK(tp.by_label("c5") == Rational(6));
  CHECK(tp.by_label("c1^5") == Rational(-486));
  CHECK(tp.by_label("c1^3c2") == Rational(-162));
  CHECK(tp.by_label("c1^2c3") == Rational(18));
  CHECK(tp.by_label("c1c4") == Rational(18));
  CHECK(tp.by_label("c1c2^2") == Rational(-54));
  CHECK(tp.by_label("c2c3") == Rational(6));

  RingPtr q = make_q_ring();
  RingElement h = q->generator("h");
  TotalClass cx = powers_class(q, 5, h,
                               {Rational(-1), Rational(-1), Rational(1), Rational(3),
                                Rational(3)});
  ChernNumberTable tx = chern_numbers(Space{"X", q, cx, +1, ""});
  CHECK(tx.by_label("c5") == Rational(6));
  CHECK(tx.by_label("c1^5") == Rational(-2));
  CHECK(tx.by_label("c1^3c2") == Rational(2));
  CHECK(tx.by_label("c1^2c3") == Rational(2));
  CHECK(tx.by_label("c1c4") == Rational(-6));
  CHECK(tx.by_label("c1c2^2") == Rational(-2));
  CHECK(tx.by_label("c2c3") == Rational(-2));
}

TEST_CASE("global conjugation preserves all seven numbers") {
  RingPtr z_ring = make_z_ring();
  Space z{"Z", z_ring, c_of_z(z_ring), +1, ""};
  Space conj{"Zbar", z_ring, conjugate(z.tangent), -1, ""};
  CHECK(chern_numbers(conj) == chern_numbers(z));
}
