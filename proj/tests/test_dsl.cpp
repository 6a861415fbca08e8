#include "chern/dsl.hpp"

#include "chern/catalogue.hpp"
#include "chern/prng.hpp"
#include "doctest.h"

using namespace chern;
using namespace chern::dsl;

TEST_CASE("the builtin definition file parses and is printer-normal") {
  Declarations d = parse(builtin_defs_text());
  CHECK(d.spaces.size() == 8);
  CHECK(d.bundles.size() == 2);
  CHECK(d.checks.size() == 5);
  CHECK(print(d) == builtin_defs_text());
  // parse(print(.)) reproduces the same declarations
  Declarations again = parse(print(d));
  REQUIRE(again.spaces.size() == d.spaces.size());
  for (size_t i = 0; i < d.spaces.size(); ++i) {
    CHECK(again.spaces[i].name == d.spaces[i].name);
    CHECK(expr_equal(again.spaces[i].chern, d.spaces[i].chern));
  }
}

TEST_CASE("the builtin definitions build the catalogued spaces") {
  LoadedDefs defs = build(parse(builtin_defs_text()));
  Catalogue cat = build_standard_spaces();
  for (const Space& loaded : defs.spaces) {
    REQUIRE(cat.has(loaded.name));
    const Space& built = cat.by_name(loaded.name);
    CHECK(loaded.ring->structurally_equal(*built.ring));
    CHECK(loaded.tangent == built.tangent);
    CHECK(loaded.orientation == built.orientation);
  }
  CHECK(defs.bundles.count("TpQ") == 1);
  CHECK(defs.bundles.at("TpQ").rank() == 2);
  for (const auto& outcome : run_checks(defs)) {
    INFO(outcome.decl.space << " : " << print_expr(outcome.decl.expr));
    CHECK(outcome.pass);
  }
}

TEST_CASE("relations accept matching degrees and reject mismatches") {
  const char* good =
      "space A {\n"
      "  generator x : 6;\n"
      "  generator y : 2;\n"
      "  relation x^2 = 0;\n"
      "  relation y^3 = -2*x;\n"
      "  fundamental x*y^2 = 1;\n"
      "  orientation +1;\n"
      "  chern 1 + 3*y;\n"
      "}\n";
  CHECK_NOTHROW(build(parse(good)));

  const char* bad =
      "space A {\n"
      "  generator x : 4;\n"
      "  generator y : 2;\n"
      "  relation y^3 = x;\n"
      "  fundamental x*y = 1;\n"
      "  orientation +1;\n"
      "  chern 1 + y;\n"
      "}\n";
  try {
    build(parse(bad));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degree_mismatch);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse("space A {\n  generator : 2;\n}\n");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    REQUIRE(e.location().has_value());
    CHECK(e.location()->line == 2);
  }
  try {
    parse("space A { generator x : 2; \xc2\xa7 }");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("duplicate names are rejected") {
  const char* text =
      "space A { generator g : 2; fundamental g = 1; orientation +1; chern 1; }\n"
      "space A { generator g : 2; fundamental g = 1; orientation +1; chern 1; }\n";
  try {
    parse(text);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("expression evaluation in spaces") {
  Catalogue cat = build_standard_spaces();

  auto expr_of = [](const std::string& text) {
    Declarations d = parse("check E : " + text + " = 0;");
    return d.checks.at(0).expr;
  };

  SUBCASE("c1^2*c3 pairs to 18 on P(TS6)") {
    EvalResult r = eval_expression(expr_of("c1^2*c3"), cat.by_name("PTS6"));
    CHECK(r.is_number);
    CHECK(r.number == Rational(18));
  }
  SUBCASE("c1^5 on X") {
    EvalResult r = eval_expression(expr_of("c1^5"), cat.by_name("X"));
    CHECK(r.is_number);
    CHECK(r.number == Rational(-2));
  }
  SUBCASE("c1^0 reports the element 1, not a number") {
    EvalResult r = eval_expression(expr_of("c1^0"), cat.by_name("X"));
    CHECK_FALSE(r.is_number);
    CHECK(r.element == cat.by_name("X").ring->one());
  }
  SUBCASE("generator expressions") {
    EvalResult r = eval_expression(expr_of("18*(1/18)*L^5"), cat.by_name("Z"));
    CHECK(r.is_number);
    CHECK(r.number == Rational(18));
  }
  SUBCASE("unknown symbols are reported") {
    try {
      eval_expression(expr_of("c1*w"), cat.by_name("Z"));
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unknown_symbol);
    }
  }
  SUBCASE("division by a non-scalar is rejected") {
    try {
      eval_expression(expr_of("1/(1+L)"), cat.by_name("Z"));
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }
}

TEST_CASE("printer is a fixed point on random declarations") {
  Prng rng(41);
  for (int i = 0; i < 120; ++i) {
    Declarations d;
    SpaceDecl s;
    s.name = "R" + std::to_string(i);
    s.generators.push_back({"g", 2});
    s.generators.push_back({"w", 4});
    std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
      auto node = std::make_shared<Expr>();
      long pick = depth <= 0 ? rng.uniform(0, 1) : rng.uniform(0, 6);
      switch (pick) {
        case 0:
          node->kind = Expr::Kind::integer;
          node->value = BigInt(rng.uniform(0, 50));
          break;
        case 1:
          node->kind = Expr::Kind::symbol;
          node->name = rng.uniform(0, 1) ? "g" : (rng.uniform(0, 1) ? "w" : "c2");
          break;
        case 2:
        case 3:
          node->kind = pick == 2 ? Expr::Kind::add : Expr::Kind::sub;
          node->lhs = gen(depth - 1);
          node->rhs = gen(depth - 1);
          break;
        case 4:
          node->kind = rng.uniform(0, 1) ? Expr::Kind::mul : Expr::Kind::div;
          node->lhs = gen(depth - 1);
          node->rhs = gen(depth - 1);
          break;
        case 5:
          node->kind = Expr::Kind::neg;
          node->operand = gen(depth - 1);
          break;
        default:
          node->kind = Expr::Kind::pow;
          node->operand = gen(depth - 1);
          node->exponent = static_cast<int>(rng.uniform(0, 9));
          break;
      }
      return node;
    };
    s.chern = gen(4);
    s.fundamental.push_back({{{"g", 3}, {"w", 2}}, rng.rational(40, 9), {}});
    if (rng.uniform(0, 1)) s.relations.push_back({{{"g", 6}}, gen(3), {}});
    if (rng.uniform(0, 1)) s.lattice.push_back({4, gen(2), {}});
    s.orientation = rng.uniform(0, 1) ? +1 : -1;
    d.order.emplace_back('s', 0);
    d.spaces.push_back(std::move(s));

    std::string once = print(d);
    Declarations parsed = parse(once);
    std::string twice = print(parsed);
    INFO(once);
    CHECK(once == twice);
    // and the reparse matches the original AST
    REQUIRE(parsed.spaces.size() == 1);
    CHECK(expr_equal(parsed.spaces[0].chern, d.spaces[0].chern));
  }
}

TEST_CASE("checks from the definition file fail loudly on wrong values") {
  const char* text =
      "space A {\n"
      "  generator g : 2;\n"
      "  relation g^2 = 0;\n"
      "  fundamental g = 1;\n"
      "  orientation +1;\n"
      "  chern 1 + 3*g;\n"
      "}\n"
      "\n"
      "check A : c1 = 4;\n";
  LoadedDefs defs = build(parse(text));
  auto outcomes = run_checks(defs);
  REQUIRE(outcomes.size() == 1);
  CHECK_FALSE(outcomes[0].pass);
}
