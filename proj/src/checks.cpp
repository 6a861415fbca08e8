#include "chern/checks.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "chern/dsl.hpp"
#include "chern/prng.hpp"
#include "chern/riemann_roch.hpp"
#include "chern/rigidity.hpp"
#include "chern/unipoly.hpp"

namespace chern::checks {

namespace {

RingElement random_homogeneous(Prng& rng, const RingPtr& ring, int degree) {
  MonomialCombo combo;
  for (const Monomial& m : ring->basis(degree)) combo.emplace_back(rng.rational(9, 6), m);
  return ring->element(combo);
}

TotalClass random_class(Prng& rng, const RingPtr& ring, int rank) {
  std::vector<RingElement> parts = {ring->one()};
  for (int k = 1; k <= ring->top_degree() / 2; ++k)
    parts.push_back(random_homogeneous(rng, ring, 2 * k));
  return TotalClass::from_parts(ring, rank, parts);
}

// vanishes above its rank, as the class of a bundle does
TotalClass random_bundle(Prng& rng, const RingPtr& ring, int rank) {
  std::vector<RingElement> parts = {ring->one()};
  for (int k = 1; k <= ring->top_degree() / 2; ++k)
    parts.push_back(k <= rank ? random_homogeneous(rng, ring, 2 * k) : ring->zero());
  return TotalClass::from_parts(ring, rank, parts);
}

MonomialCombo random_combo(Prng& rng, const RingPtr& ring) {
  MonomialCombo combo;
  const size_t n = ring->presentation().generators.size();
  long terms = rng.uniform(1, 4);
  for (long t = 0; t < terms; ++t) {
    Monomial m(n, 0);
    for (size_t i = 0; i < n; ++i) m[i] = static_cast<unsigned>(rng.uniform(0, 4));
    combo.emplace_back(rng.rational(9, 6), m);
  }
  return combo;
}

ChernNumberTable expected_table(std::array<long, 7> display_order_values) {
  // incoming order: c5, c1^5, c1^3c2, c1^2c3, c1c4, c1c2^2, c2c3
  ChernNumberTable t;
  const auto& order = ChernNumberTable::display_order();
  for (int i = 0; i < ChernNumberTable::kCount; ++i)
    t.values[static_cast<size_t>(order[static_cast<size_t>(i)])] =
        Rational(display_order_values[static_cast<size_t>(i)]);
  return t;
}

const Catalogue& catalogue() {
  static const Catalogue cat = build_standard_spaces();
  return cat;
}

std::vector<RingPtr> catalogued_rings() {
  std::vector<RingPtr> out;
  for (const auto& s : catalogue().spaces) {
    if (std::find_if(out.begin(), out.end(), [&](const RingPtr& r) {
          return r.get() == s.ring.get();
        }) == out.end())
      out.push_back(s.ring);
  }
  return out;
}

std::vector<const Space*> five_folds() {
  std::vector<const Space*> out;
  for (const auto& s : catalogue().spaces)
    if (s.ring->top_degree() == 10) out.push_back(&s);
  return out;
}

RingPtr universal_ring() {
  static const RingPtr ring = [] {
    RingPresentation p;
    p.name = "universal";
    p.generators = {{"u1", 2}, {"u2", 4}, {"u3", 6}, {"u4", 8}, {"u5", 10}};
    p.top_degree = 10;
    for (const Monomial& m : std::vector<Monomial>{
             {5, 0, 0, 0, 0}, {3, 1, 0, 0, 0}, {2, 0, 1, 0, 0}, {1, 2, 0, 0, 0},
             {1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 0, 1}})
      p.fundamental.emplace_back(m, Rational(1));
    return Ring::make(std::move(p));
  }();
  return ring;
}

struct Runner {
  std::vector<CheckResult> results;
  int cases;
  uint64_t seed;

  void run(const std::string& name, const std::function<std::string(Prng&)>& body) {
    Prng rng(seed + results.size() * 0x9e37ull + 1);
    CheckResult r;
    r.name = name;
    try {
      r.detail = body(rng);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string check_tables() {
  struct Row {
    const char* name;
    std::array<long, 7> values;  // c5, c1^5, c1^3c2, c1^2c3, c1c4, c1c2^2, c2c3
  };
  const Row rows[] = {
      {"Z", {6, 4374, 2106, 594, 90, 1014, 286}},
      {"N", {6, -18, -6, 18, 18, -2, 6}},
      {"Q", {6, 6250, 2750, 650, 90, 1210, 286}},
      {"PTS6", {6, -486, -162, 18, 18, -54, 6}},
      {"PTstarS6", {6, 486, 162, 18, 18, 54, 6}},
      {"X", {6, -2, 2, 2, -6, -2, -2}},
  };
  for (const Row& row : rows) {
    ChernNumberTable got = chern_numbers(catalogue().by_name(row.name));
    if (!got.all_integral()) return std::string(row.name) + ": non-integral Chern numbers";
    if (!(got == expected_table(row.values))) {
      std::string detail = std::string(row.name) + ": got (";
      const auto& order = ChernNumberTable::display_order();
      for (int i = 0; i < 7; ++i) {
        if (i) detail += ", ";
        detail += got.values[static_cast<size_t>(order[static_cast<size_t>(i)])].to_string();
      }
      return detail + ")";
    }
  }
  return "";
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> run_all(int cases, uint64_t seed) {
  Runner runner{{}, cases, seed};
  const Catalogue& cat = catalogue();

  runner.run("rational arithmetic axioms and normalization", [&](Prng& rng) -> std::string {
    for (int i = 0; i < runner.cases; ++i) {
      Rational a = rng.rational(50, 30), b = rng.rational(50, 30), c = rng.rational(50, 30);
      if ((a + b) + c != a + (b + c)) return "associativity failed";
      if (a * (b + c) != a * b + a * c) return "distributivity failed";
      for (const Rational& v : {a + b, a - b, a * b}) {
        if (sgn(v.denominator()) <= 0) return "denominator not positive";
        if (gcd(abs(v.numerator()), v.denominator()) != 1) return "not in lowest terms";
      }
      if ((a - a) != Rational(0) || (a - a).denominator() != 1) return "zero not 0/1";
    }
    return "";
  });

  runner.run("polynomial expansion matches factor evaluation", [&](Prng& rng) -> std::string {
    for (int i = 0; i < runner.cases; ++i) {
      std::vector<std::pair<Rational, Rational>> factors;
      long k = rng.uniform(1, 5);
      for (long j = 0; j < k; ++j) factors.emplace_back(rng.rational(6, 4), rng.rational(6, 4));
      UniPoly p = UniPoly::expand_linear_factors(factors);
      Rational r = rng.rational(8, 5);
      Rational direct(1);
      for (const auto& [a, b] : factors) direct *= a * r + b;
      if (p.eval(r) != direct) return "expansion and product evaluation differ";
    }
    return "";
  });

  runner.run("ring multiplication associative and commutative", [&](Prng& rng) -> std::string {
    for (const RingPtr& ring : catalogued_rings()) {
      for (int i = 0; i < runner.cases / 4 + 5; ++i) {
        RingElement a = ring->element(random_combo(rng, ring));
        RingElement b = ring->element(random_combo(rng, ring));
        RingElement c = ring->element(random_combo(rng, ring));
        if ((a * b) * c != a * (b * c)) return ring->name() + ": associativity failed";
        if (a * b != b * a) return ring->name() + ": commutativity failed";
      }
    }
    return "";
  });

  runner.run("normalization idempotent", [&](Prng& rng) -> std::string {
    for (const RingPtr& ring : catalogued_rings()) {
      for (int i = 0; i < runner.cases / 4 + 5; ++i) {
        RingElement e = ring->element(random_combo(rng, ring));
        MonomialCombo back;
        for (size_t di = 0; di < e.components().size(); ++di)
          for (size_t j = 0; j < e.components()[di].size(); ++j)
            back.emplace_back(e.components()[di][j], ring->basis(static_cast<int>(di) * 2)[j]);
        if (ring->element(back) != e) return ring->name() + ": re-normalizing changed element";
      }
    }
    return "";
  });

  runner.run("lattice duality unimodular", [&](Prng&) -> std::string {
    for (const RingPtr& ring : catalogued_rings()) {
      for (int d = 0; d <= ring->top_degree(); d += 2) {
        const auto& low = ring->lattice_generators(d);
        const auto& high = ring->lattice_generators(ring->top_degree() - d);
        const size_t n = low.size();
        if (high.size() != n) return ring->name() + ": lattice ranks differ across duality";
        // determinant of the pairing matrix must be +-1
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j)
            m[i][j] = ring->evaluate_top(low[i] * high[j], +1);
        Rational det(1);
        for (size_t col = 0; col < n; ++col) {
          size_t piv = col;
          while (piv < n && m[piv][col].is_zero()) ++piv;
          if (piv == n) return ring->name() + ": singular pairing in degree " + std::to_string(d);
          if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
          }
          det *= m[col][col];
          Rational inv = Rational(1) / m[col][col];
          for (size_t i = col + 1; i < n; ++i) {
            Rational f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
          }
        }
        if (det != Rational(1) && det != Rational(-1))
          return ring->name() + ": degree " + std::to_string(d) + " pairing det " + det.to_string();
      }
    }
    return "";
  });

  runner.run("Grothendieck relation normalizes to zero", [&](Prng& rng) -> std::string {
    const Space& s6 = cat.by_name("S6");
    for (const char* name : {"PTS6", "PTstarS6"}) {
      const Space& s = cat.by_name(name);
      RingElement y = s.ring->generator("y");
      TotalClass bundle = std::string(name) == "PTS6" ? s6.tangent : conjugate(s6.tangent);
      RingElement rel = y.pow(3);
      for (int i = 1; i <= 3; ++i)
        rel += pullback(s.ring, bundle.part(i)) * y.pow(static_cast<unsigned>(3 - i));
      if (!rel.is_zero()) return std::string(name) + ": relation does not vanish";
    }
    // a random rank-2 bundle over CP6, including two-dimensional degrees
    const Space& cp6 = cat.by_name("CP6");
    for (int i = 0; i < 10; ++i) {
      RingElement H = cp6.ring->generator("H");
      RingElement c1 = rng.rational(5, 1) * H;
      RingElement c2 = rng.rational(5, 1) * H.pow(2);
      RingPtr pr = projectivize(cp6.ring, 2, {c1, c2}, "y");
      RingElement y = pr->generator("y");
      RingElement rel = y.pow(2) + pullback(pr, c1) * y + pullback(pr, c2);
      if (!rel.is_zero()) return "projectivized CP6 bundle: relation does not vanish";
    }
    return "";
  });

  runner.run("whitney quotient round-trip", [&](Prng& rng) -> std::string {
    for (const Space* s : five_folds()) {
      for (int i = 0; i < runner.cases / 6 + 20; ++i) {
        TotalClass a = random_class(rng, s->ring, static_cast<int>(rng.uniform(0, 5)));
        TotalClass b = random_class(rng, s->ring, static_cast<int>(rng.uniform(0, 5)));
        if (series_quotient(whitney(a, b), b) != a) return s->name + ": round-trip failed";
      }
    }
    return "";
  });

  runner.run("conjugation is an involution", [&](Prng& rng) -> std::string {
    for (const Space* s : five_folds())
      for (int i = 0; i < runner.cases / 6 + 20; ++i) {
        TotalClass a = random_class(rng, s->ring, 5);
        if (conjugate(conjugate(a)) != a) return s->name + ": double conjugation changed class";
      }
    return "";
  });

  runner.run("line twist inverts", [&](Prng& rng) -> std::string {
    for (const Space* s : five_folds())
      for (int i = 0; i < runner.cases / 6 + 20; ++i) {
        TotalClass a = random_bundle(rng, s->ring, static_cast<int>(rng.uniform(0, 5)));
        RingElement t = random_homogeneous(rng, s->ring, 2);
        if (twist_line(twist_line(a, t), -t) != a) return s->name + ": twist inverse failed";
      }
    // catalogued bundle instances, including the rank-5 tangent classes
    for (const Space* s : five_folds()) {
      RingElement t = s->ring->lattice_generators(2).front();
      if (twist_line(twist_line(s->tangent, t), -t) != s->tangent)
        return s->name + ": twist inverse failed on the tangent class";
    }
    return "";
  });

  runner.run("Todd class: series-generated coefficients", [&](Prng& rng) -> std::string {
    RingPtr u = universal_ring();
    TotalClass c = TotalClass::from_parts(
        u, 5,
        {u->one(), u->generator("u1"), u->generator("u2"), u->generator("u3"),
         u->generator("u4"), u->generator("u5")});
    std::vector<RingElement> td = todd(c);
    RingElement u1 = u->generator("u1"), u2 = u->generator("u2"), u3 = u->generator("u3"),
                u4 = u->generator("u4");
    if (td[1] != Rational(1, 2) * u1) return "td1 != c1/2";
    if (td[2] != Rational(1, 12) * (u1 * u1 + u2)) return "td2 != (c1^2+c2)/12";
    RingElement expected5 =
        Rational(1, 1440) * (-(u1.pow(3) * u2) + u1.pow(2) * u3 +
                             Rational(3) * (u1 * u2 * u2) - u1 * u4);
    if (td[5] != expected5) return "degree-5 Todd expansion differs";
    for (int i = 0; i < runner.cases; ++i) {
      const Space* s = five_folds()[static_cast<size_t>(rng.uniform(0, 5))];
      TotalClass a = random_class(rng, s->ring, 5);
      if (todd(a)[1] != Rational(1, 2) * a.part(1)) return "td1 != c1/2 on random class";
    }
    const Space& z = cat.by_name("Z");
    if (z.ring->evaluate_top(todd(z.tangent)[5], +1) != Rational(1))
      return "Todd genus of Z differs from 1";
    return "";
  });

  runner.run("Newton identities round-trip", [&](Prng& rng) -> std::string {
    RingPtr u = universal_ring();
    TotalClass c = TotalClass::from_parts(
        u, 5,
        {u->one(), u->generator("u1"), u->generator("u2"), u->generator("u3"),
         u->generator("u4"), u->generator("u5")});
    if (chern_from_power_sums(u, 5, power_sums(c, 5)) != c)
      return "universal round-trip failed";
    for (int i = 0; i < runner.cases; ++i) {
      const Space* s = five_folds()[static_cast<size_t>(rng.uniform(0, 5))];
      TotalClass a = random_class(rng, s->ring, 5);
      if (chern_from_power_sums(s->ring, 5, power_sums(a, 5)) != a)
        return s->name + ": round-trip failed";
    }
    return "";
  });

  runner.run("Euler numbers", [&](Prng&) -> std::string {
    for (const Space* s : five_folds()) {
      Rational ec = s->ring->evaluate_top(s->tangent.part(5), s->orientation);
      if (ec != Rational(6)) return s->name + ": Euler number " + ec.to_string();
    }
    const Space& s6 = cat.by_name("S6");
    if (s6.ring->evaluate_top(s6.tangent.part(3), s6.orientation) != Rational(2))
      return "S6 Euler number differs from 2";
    const Space& cp6 = cat.by_name("CP6");
    if (cp6.ring->evaluate_top(cp6.tangent.part(6), cp6.orientation) != Rational(7))
      return "CP6 Euler number differs from 7";
    return "";
  });

  runner.run("Chern numbers invariant under global conjugation", [&](Prng& rng) -> std::string {
    for (const Space* s : five_folds()) {
      Space conj = *s;
      conj.tangent = conjugate(s->tangent);
      conj.orientation = -s->orientation;
      if (!(chern_numbers(conj) == chern_numbers(*s)))
        return s->name + ": conjugation changed Chern numbers";
    }
    for (int i = 0; i < runner.cases; ++i) {
      const Space* host = five_folds()[static_cast<size_t>(rng.uniform(0, 5))];
      Space s{"random", host->ring, random_class(rng, host->ring, 5),
              rng.uniform(0, 1) == 0 ? +1 : -1, ""};
      Space conj{"random-bar", s.ring, conjugate(s.tangent), -s.orientation, ""};
      if (!(chern_numbers(conj) == chern_numbers(s)))
        return "conjugation changed the numbers of a random class";
    }
    return "";
  });

  runner.run("tables reproduce", [&](Prng&) -> std::string { return check_tables(); });

  runner.run("Pontryagin classes", [&](Prng& rng) -> std::string {
    const Space& z = cat.by_name("Z");
    RingElement L = z.ring->generator("L");
    auto [p1z, p2z] = pontryagin(z.tangent);
    if (p1z != Rational(1, 3) * L.pow(2) || p2z != Rational(1, 9) * L.pow(4))
      return "Pontryagin classes of Z differ";
    const Space& q = cat.by_name("Q");
    RingElement h = q.ring->generator("h");
    auto [p1q, p2q] = pontryagin(q.tangent);
    if (p1q != Rational(3) * h.pow(2) || p2q != Rational(9) * h.pow(4))
      return "Pontryagin classes of Q differ";
    for (auto [a, b] : {std::pair{"Q", "X"}, std::pair{"Z", "N"}}) {
      auto pa = pontryagin(cat.by_name(a).tangent);
      auto pb = pontryagin(cat.by_name(b).tangent);
      if (pa != pb) return std::string(a) + " vs " + b + ": flip changed Pontryagin classes";
    }
    for (int i = 0; i < runner.cases; ++i) {
      const Space* s = five_folds()[static_cast<size_t>(rng.uniform(0, 5))];
      TotalClass a = random_class(rng, s->ring, 5);
      if (pontryagin(conjugate(a)) != pontryagin(a))
        return "conjugation changed Pontryagin classes";
    }
    return "";
  });

  runner.run("Chern character", [&](Prng&) -> std::string {
    const Space& z = cat.by_name("Z");
    RingElement L = z.ring->generator("L");
    auto ch = chern_character(z.tangent);
    if (ch[2] != Rational(1, 6) * L.pow(2)) return "ch2(Z) != L^2/6";
    if (ch[2] == Rational(1, 2) * L.pow(2)) return "ch2(Z) equals the refuted value";
    for (const Space* s : five_folds()) {
      auto [p1, p2] = pontryagin(s->tangent);
      if (chern_character(s->tangent)[2] != Rational(1, 2) * p1)
        return s->name + ": ch2 != p1/2";
    }
    return "";
  });

  runner.run("Hilbert polynomial", [&](Prng&) -> std::string {
    const Space& z = cat.by_name("Z");
    RingElement L = z.ring->generator("L");
    UniPoly p = hilbert_polynomial(z, L);
    UniPoly expected({Rational(1), Rational(211, 60), Rational(39, 8), Rational(10, 3),
                      Rational(9, 8), Rational(3, 20)});
    if (p != expected) return "coefficients differ: " + p.to_string();
    auto cmp = compare_with_product_form(p);
    if (!cmp.equal) return "differs from the product form";
    UniPoly perturbed = p;
    perturbed += UniPoly({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                          Rational(1, 8) - Rational(3, 20)});
    auto cmp2 = compare_with_product_form(perturbed);
    if (cmp2.equal || cmp2.differing_degrees != std::vector<int>{5})
      return "perturbed polynomial not flagged at degree 5";
    if (p.eval(Rational(0)) != Rational(1)) return "P(0) != 1";
    if (p.eval(Rational(1)) != Rational(14)) return "P(1) != 14";
    for (long r = 0; r <= 10; ++r)
      if (!p.eval(Rational(r)).is_integer())
        return "P(" + std::to_string(r) + ") not an integer";
    auto rep = extract_chern_data(p, z);
    if (rep.c15_from_r5 != Rational(4374) || !rep.r4_consistent)
      return "c1^5 extraction failed";
    if (rep.c13c2 != Rational(2106)) return "c1^3c2 extraction failed";
    const Space& q = cat.by_name("Q");
    UniPoly pq = hilbert_polynomial(q, q.ring->generator("h"));
    for (long r = -10; r <= 10; ++r)
      if (!pq.eval(Rational(r)).is_integer())
        return "Q polarization value at " + std::to_string(r) + " not an integer";
    return "";
  });

  runner.run("rigidity scan", [&](Prng&) -> std::string {
    using namespace rigidity;
    TopologicalInput in = standard_input();
    std::vector<long> expected_candidates = {1, 3, -1, -3, -5, -9, -15, -45};
    if (candidate_set(in) != expected_candidates) return "candidate set differs";
    ScanResult res = scan(in);
    if (res.survivors != std::vector<long>{3}) return "survivors differ";
    if (res.reports.size() != 8) return "report count differs";
    auto reason_of = [&](long d) {
      for (const auto& r : res.reports)
        if (r.d == d) return r.reason;
      return FailReason::none;
    };
    for (long d : {1L, -1L, -5L, -3L})
      if (reason_of(d) != FailReason::todd_vs_pontryagin_mismatch)
        return "case " + std::to_string(d) + " has the wrong reason";
    for (long d : {-9L, -45L})
      if (reason_of(d) != FailReason::mod27_obstruction)
        return "case " + std::to_string(d) + " has the wrong reason";
    if (reason_of(-15) != FailReason::integrality_failure) return "case -15 has the wrong reason";
    const Space& z = cat.by_name("Z");
    for (const auto& r : res.reports) {
      if (!r.pass) continue;
      RingElement L = in.ring->generator("L");
      if (Rational(r.d) * L != z.tangent.part(1) || r.c2 != z.tangent.part(2) ||
          r.c3 != z.tangent.part(3) || r.c4 != z.tangent.part(4))
        return "survivor classes differ from the catalogued Z";
    }
    for (long d = -100; d <= 100; ++d) {
      bool integral = Rational(3 * d * d - 1, 2).is_integer();
      if (integral != (d % 2 != 0)) return "half-integrality pattern broken at " + std::to_string(d);
    }
    // order independence: reports only depend on d
    auto forward = res.reports;
    for (auto it = expected_candidates.rbegin(); it != expected_candidates.rend(); ++it) {
      CaseReport again = case_check(*it, in);
      const CaseReport& ref = *std::find_if(forward.begin(), forward.end(),
                                            [&](const CaseReport& r) { return r.d == *it; });
      if (again.reason != ref.reason || again.todd_rhs != ref.todd_rhs ||
          again.pontryagin_lhs != ref.pontryagin_lhs)
        return "case " + std::to_string(*it) + " depends on scan order";
    }
    TopologicalInput perturbed = standard_input();
    perturbed.p1 = perturbed.ring->generator("L").pow(2);
    if (!scan(perturbed).survivors.empty()) return "perturbed input still has survivors";
    return "";
  });

  runner.run("conjugation square", [&](Prng&) -> std::string {
    const Space& q = cat.by_name("Q");
    RingElement h = q.ring->generator("h");
    Figure3Report rep = figure3_square(cat, h);
    if (!rep.commutes) return "square does not commute at t = h";
    std::vector<Rational> expected = {Rational(1), Rational(-3), Rational(3), Rational(-1),
                                      Rational(3), Rational(-3)};
    for (int k = 0; k <= 5; ++k) {
      RingElement want = expected[static_cast<size_t>(k)] * h.pow(static_cast<unsigned>(k));
      if (rep.corner_c.tangent.part(k) != want) return "corner coefficients differ";
    }
    if (rep.corner_c.orientation != -1) return "corner orientation differs";
    if (rep.match_q.empty() || rep.match_a.empty() || rep.match_b.empty() ||
        rep.match_cd.empty())
      return "a corner matches no catalogued space";
    ChernNumberTable b_numbers = chern_numbers(rep.corner_b);
    if (!(b_numbers == chern_numbers(cat.by_name("PTS6"))) &&
        !(b_numbers == chern_numbers(cat.by_name("PTstarS6"))))
      return "vertical flip of Q misses both projectivized columns";
    Figure3Report trivial = figure3_square(cat, q.ring->zero());
    if (!trivial.commutes) return "square does not commute at t = 0";
    return "";
  });

  runner.run("catalogue consistency", [&](Prng&) -> std::string {
    const Space& z = cat.by_name("Z");
    Rational deg = z.ring->evaluate_top(z.ring->generator("L").pow(5), +1);
    if (deg / Rational(2) + Rational(1) != Rational(10)) return "genus differs from 10";
    if (deg / Rational(2) + Rational(5) != Rational(14))
      return "isometry dimension differs from 14";
    TotalClass fiber = kobayashi_fiber(z);
    if (fiber.part(1) != z.ring->generator("L")) return "twistor fiber class differs from 1+L";
    const Space& pts6 = cat.by_name("PTS6");
    RingElement y = pts6.ring->generator("y");
    TotalClass tp = TotalClass::from_parts(
        pts6.ring, 2, {pts6.ring->one(), Rational(3) * y, Rational(3) * y.pow(2)});
    MatchReport m = match_up_to_symmetry(cat.by_name("PTstarS6"), flip(pts6, tp));
    if (!m.matched || !m.orientation_agrees || m.generator_sign != -1)
      return "cotangent projectivization and fiber flip disagree";
    MatchReport qq = match_up_to_symmetry(cat.by_name("Q"), cat.by_name("Q"));
    if (!qq.matched || qq.generator_sign != +1 || qq.globally_conjugated)
      return "Q does not match itself trivially";
    MatchReport qx = match_up_to_symmetry(cat.by_name("Q"), cat.by_name("X"));
    if (qx.matched) return "Q unexpectedly matches X";
    return "";
  });

  runner.run("definition file round-trip", [&](Prng& rng) -> std::string {
    const std::string& builtin = dsl::builtin_defs_text();
    dsl::Declarations d = dsl::parse(builtin);
    if (dsl::print(d) != builtin) return "builtin definitions are not printer-normal";
    dsl::LoadedDefs defs = dsl::build(d);
    for (const auto& outcome : dsl::run_checks(defs))
      if (!outcome.pass)
        return "builtin check failed: " + dsl::print_expr(outcome.decl.expr) + " on " +
               outcome.decl.space + ": " + outcome.detail;
    // random well-formed sources: printing is a fixed point of parse+print
    for (int i = 0; i < runner.cases; ++i) {
      dsl::Declarations random_decl;
      dsl::SpaceDecl s;
      s.name = "A" + std::to_string(i);
      s.generators.push_back({"g", 2});
      std::function<dsl::ExprPtr(int)> gen = [&](int depth) -> dsl::ExprPtr {
        auto node = std::make_shared<dsl::Expr>();
        long pick = depth <= 0 ? rng.uniform(0, 1) : rng.uniform(0, 6);
        switch (pick) {
          case 0:
            node->kind = dsl::Expr::Kind::integer;
            node->value = BigInt(rng.uniform(0, 99));
            break;
          case 1:
            node->kind = dsl::Expr::Kind::symbol;
            node->name = rng.uniform(0, 1) ? "g" : "c1";
            break;
          case 2:
          case 3: {
            node->kind = pick == 2 ? dsl::Expr::Kind::add : dsl::Expr::Kind::sub;
            node->lhs = gen(depth - 1);
            node->rhs = gen(depth - 1);
            break;
          }
          case 4: {
            node->kind = rng.uniform(0, 1) ? dsl::Expr::Kind::mul : dsl::Expr::Kind::div;
            node->lhs = gen(depth - 1);
            node->rhs = gen(depth - 1);
            break;
          }
          case 5:
            node->kind = dsl::Expr::Kind::neg;
            node->operand = gen(depth - 1);
            break;
          default:
            node->kind = dsl::Expr::Kind::pow;
            node->operand = gen(depth - 1);
            node->exponent = static_cast<int>(rng.uniform(0, 7));
            break;
        }
        return node;
      };
      s.chern = gen(3);
      s.fundamental.push_back({{{"g", 5}}, rng.rational(30, 7)});
      if (rng.uniform(0, 1)) s.relations.push_back({{{"g", 6}}, gen(2), {}});
      if (rng.uniform(0, 1)) s.lattice.push_back({4, gen(2), {}});
      s.orientation = rng.uniform(0, 1) ? +1 : -1;
      random_decl.order.emplace_back('s', 0);
      random_decl.spaces.push_back(std::move(s));
      std::string once = dsl::print(random_decl);
      std::string twice = dsl::print(dsl::parse(once));
      if (once != twice) return "printer is not a fixed point on:\n" + once;
    }
    return "";
  });

  runner.run("definitions agree with the catalogue", [&](Prng&) -> std::string {
    dsl::LoadedDefs defs = dsl::build(dsl::parse(dsl::builtin_defs_text()));
    for (const Space& loaded : defs.spaces) {
      if (!cat.has(loaded.name)) return "definition file names unknown space " + loaded.name;
      const Space& built = cat.by_name(loaded.name);
      if (!loaded.ring->structurally_equal(*built.ring))
        return loaded.name + ": ring presentations disagree";
      if (loaded.tangent != built.tangent) return loaded.name + ": tangent classes disagree";
      if (loaded.orientation != built.orientation)
        return loaded.name + ": orientations disagree";
    }
    return "";
  });

  return runner.results;
}

}  // namespace chern::checks
