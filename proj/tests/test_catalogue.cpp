#include "chern/catalogue.hpp"

#include <array>

#include "doctest.h"

using namespace chern;

namespace {

const Catalogue& cat() {
  static const Catalogue c = build_standard_spaces();
  return c;
}

void check_column(const std::string& name, std::array<long, 7> expected) {
  // order: c5, c1^5, c1^3c2, c1^2c3, c1c4, c1c2^2, c2c3
  ChernNumberTable t = chern_numbers(cat().by_name(name));
  const char* labels[] = {"c5", "c1^5", "c1^3c2", "c1^2c3", "c1c4", "c1c2^2", "c2c3"};
  for (int i = 0; i < 7; ++i) {
    INFO(name << " " << labels[i]);
    CHECK(t.by_label(labels[i]) == Rational(expected[static_cast<size_t>(i)]));
  }
}

}  // namespace

TEST_CASE("catalogue builds and verifies") {
  CHECK(cat().spaces.size() == 8);
  for (const char* name : {"CP6", "S6", "Q", "PTS6", "PTstarS6", "X", "Z", "N"})
    CHECK(cat().has(name));
  CHECK_FALSE(cat().has("M"));
}

TEST_CASE("tangent classes of the constructed spaces") {
  const Space& q = cat().by_name("Q");
  RingElement h = q.ring->generator("h");
  CHECK(q.tangent.part(1) == Rational(5) * h);
  CHECK(q.tangent.part(5) == Rational(3) * h.pow(5));

  const Space& z = cat().by_name("Z");
  RingElement L = z.ring->generator("L");
  CHECK(z.tangent.part(3) == Rational(11, 3) * L.pow(3));
  CHECK(z.tangent.part(3) == Rational(22) * (Rational(1, 6) * L.pow(3)));

  const Space& n = cat().by_name("N");
  CHECK(n.tangent.part(1) == L);
  CHECK(n.tangent.part(2) == Rational(1, 3) * L.pow(2));
  CHECK(n.tangent.part(3) == -L.pow(3));
  CHECK(n.tangent.part(4) == -L.pow(4));
  CHECK(n.tangent.part(5) == Rational(-1, 3) * L.pow(5));
  CHECK(n.orientation == -1);

  const Space& x = cat().by_name("X");
  CHECK(x.tangent.part(1) == -h);
  CHECK(x.orientation == +1);

  const Space& pts6 = cat().by_name("PTS6");
  RingElement xx = pts6.ring->generator("x");
  RingElement y = pts6.ring->generator("y");
  CHECK(pts6.tangent.part(1) == Rational(3) * y);
  CHECK(pts6.tangent.part(3) == Rational(2) * xx);
  CHECK(pts6.tangent.part(5) == Rational(6) * (xx * y.pow(2)));
}

TEST_CASE("table 1 and table 2 columns") {
  check_column("Z", {6, 4374, 2106, 594, 90, 1014, 286});
  check_column("N", {6, -18, -6, 18, 18, -2, 6});
  check_column("Q", {6, 6250, 2750, 650, 90, 1210, 286});
  check_column("PTS6", {6, -486, -162, 18, 18, -54, 6});
  check_column("PTstarS6", {6, 486, 162, 18, 18, 54, 6});
  check_column("X", {6, -2, 2, 2, -6, -2, -2});
}

TEST_CASE("kobayashi fiber") {
  const Space& z = cat().by_name("Z");
  RingElement L = z.ring->generator("L");
  TotalClass fiber = kobayashi_fiber(z);
  CHECK(fiber.rank() == 1);
  CHECK(fiber.part(1) == L);

  Space scaled = z;
  std::vector<RingElement> parts = z.tangent.parts();
  parts[1] = Rational(6) * L;
  scaled.tangent = TotalClass::from_parts(z.ring, 5, parts);
  CHECK(kobayashi_fiber(scaled).part(1) == Rational(2) * L);

  Space bad = z;
  parts[1] = L;
  bad.tangent = TotalClass::from_parts(z.ring, 5, parts);
  try {
    kobayashi_fiber(bad);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_divisible);
  }
}

TEST_CASE("match up to symmetry") {
  SUBCASE("a space matches itself trivially") {
    MatchReport m = match_up_to_symmetry(cat().by_name("Q"), cat().by_name("Q"));
    CHECK(m.matched);
    CHECK(m.generator_sign == +1);
    CHECK_FALSE(m.globally_conjugated);
    CHECK(m.orientation_agrees);
  }
  SUBCASE("Q and X differ under all four symmetries") {
    MatchReport m = match_up_to_symmetry(cat().by_name("Q"), cat().by_name("X"));
    CHECK_FALSE(m.matched);
  }
  SUBCASE("the cotangent projectivization matches the fiber flip of P(TS6)") {
    const Space& pts6 = cat().by_name("PTS6");
    RingElement y = pts6.ring->generator("y");
    TotalClass tp = TotalClass::from_parts(
        pts6.ring, 2, {pts6.ring->one(), Rational(3) * y, Rational(3) * y.pow(2)});
    Space flipped = flip(pts6, tp);
    MatchReport m = match_up_to_symmetry(cat().by_name("PTstarS6"), flipped);
    CHECK(m.matched);
    CHECK(m.generator_sign == -1);
    CHECK_FALSE(m.globally_conjugated);
    CHECK(m.orientation_agrees);
  }
  SUBCASE("P(TS6) and P(T*S6) themselves are distinct structures") {
    MatchReport m = match_up_to_symmetry(cat().by_name("PTS6"), cat().by_name("PTstarS6"));
    CHECK_FALSE(m.matched);
  }
  SUBCASE("incomparable presentations are rejected") {
    try {
      match_up_to_symmetry(cat().by_name("S6"), cat().by_name("Q"));
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::incomparable_presentations);
    }
  }
}

TEST_CASE("figure-3 conjugation square at t = h") {
  const Space& q = cat().by_name("Q");
  RingElement h = q.ring->generator("h");
  Figure3Report rep = figure3_square(cat(), h);
  CHECK(rep.commutes);
  CHECK(rep.corner_c.orientation == -1);
  CHECK(rep.corner_d.orientation == -1);
  const Rational expected[] = {Rational(1), Rational(-3), Rational(3), Rational(-1),
                               Rational(3), Rational(-3)};
  for (int k = 0; k <= 5; ++k) {
    CHECK(rep.corner_c.tangent.part(k) ==
          expected[static_cast<size_t>(k)] * h.pow(static_cast<unsigned>(k)));
    CHECK(rep.corner_d.tangent.part(k) ==
          expected[static_cast<size_t>(k)] * h.pow(static_cast<unsigned>(k)));
  }
  CHECK(rep.match_q == "Q");
  CHECK(rep.match_a == "X");
  // the two vertical corners land on the projectivized-bundle columns
  CHECK(rep.match_b == "PTS6");
  CHECK(rep.match_cd == "PTstarS6");
  ChernNumberTable b_numbers = chern_numbers(rep.corner_b);
  bool lands_on_projectivized =
      b_numbers == chern_numbers(cat().by_name("PTS6")) ||
      b_numbers == chern_numbers(cat().by_name("PTstarS6"));
  CHECK(lands_on_projectivized);
}

TEST_CASE("figure-3 square at t = 0 commutes trivially") {
  const Space& q = cat().by_name("Q");
  Figure3Report rep = figure3_square(cat(), q.ring->zero());
  CHECK(rep.commutes);
  // vertical flips only reverse the orientation
  CHECK(rep.corner_b.tangent == q.tangent);
  CHECK(rep.corner_b.orientation == -1);
}

TEST_CASE("fano genus and isometry dimension") {
  const Space& z = cat().by_name("Z");
  Rational deg = z.ring->evaluate_top(z.ring->generator("L").pow(5), +1);
  CHECK(deg / Rational(2) + Rational(1) == Rational(10));
  CHECK(deg / Rational(2) + Rational(5) == Rational(14));
}

TEST_CASE("euler characteristics") {
  for (const char* name : {"Q", "PTS6", "PTstarS6", "X", "Z", "N"}) {
    const Space& s = cat().by_name(name);
    CHECK(s.ring->evaluate_top(s.tangent.part(5), s.orientation) == Rational(6));
  }
  const Space& s6 = cat().by_name("S6");
  CHECK(s6.ring->evaluate_top(s6.tangent.part(3), +1) == Rational(2));
  const Space& cp6 = cat().by_name("CP6");
  CHECK(cp6.ring->evaluate_top(cp6.tangent.part(6), +1) == Rational(7));
}
