#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chern/total_class.hpp"

namespace chern::dsl {

// Expression AST over rational literals, generator symbols, the Chern-class
// symbols c1..c5, +, -, *, /, ^ and parentheses. Exponents are nonnegative
// integer literals; division requires a scalar divisor.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { integer, symbol, add, sub, mul, div, neg, pow };
  Kind kind = Kind::integer;
  BigInt value;       // integer
  std::string name;   // symbol
  ExprPtr lhs, rhs;   // binary nodes
  ExprPtr operand;    // neg, pow
  int exponent = 0;   // pow
  SourceLoc loc;
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
std::string print_expr(const ExprPtr& e);

// monomial syntax: sym[^k] { * sym[^k] }
using MonomialText = std::vector<std::pair<std::string, int>>;

struct RelationClause {
  MonomialText lhs;
  ExprPtr rhs;
  SourceLoc loc;
};

struct LatticeClause {
  int degree = 0;
  ExprPtr expr;
  SourceLoc loc;
};

struct FundamentalClause {
  MonomialText monomial;
  Rational value;
  SourceLoc loc;
};

struct SpaceDecl {
  std::string name;
  std::vector<GeneratorSpec> generators;
  std::vector<RelationClause> relations;
  std::vector<LatticeClause> lattice;
  std::vector<FundamentalClause> fundamental;
  int orientation = +1;
  ExprPtr chern;
  SourceLoc loc;
};

struct BundleDecl {
  std::string name;
  std::string over;
  int rank = 0;
  ExprPtr chern;
  SourceLoc loc;
};

struct CheckDecl {
  std::string space;
  ExprPtr expr;
  ExprPtr expected;  // must evaluate to a rational
  SourceLoc loc;
};

struct Declarations {
  std::vector<SpaceDecl> spaces;
  std::vector<BundleDecl> bundles;
  std::vector<CheckDecl> checks;
  // names in declaration order, one entry per declaration: "s", "b" or "c"
  // plus index, used to print in the original order
  std::vector<std::pair<char, size_t>> order;
};

// Deterministic parse; throws Error(Errc::parse_error) carrying line/column.
Declarations parse(std::string_view text);

// Canonical printer; parse(print(d)) reproduces d and print is idempotent
// on its own output.
std::string print(const Declarations& d);

struct LoadedDefs {
  std::vector<Space> spaces;
  std::map<std::string, TotalClass> bundles;
  std::vector<CheckDecl> checks;

  bool has_space(const std::string& name) const;
  const Space& space(const std::string& name) const;
};

// Builds rings, spaces and bundles out of the declarations.
LoadedDefs build(const Declarations& d);

struct EvalResult {
  bool is_number = false;  // true when the value is a top-degree pairing
  Rational number;
  RingElement element;
};

// Evaluates an expression in a space: generator symbols resolve in its
// ring, c1..c5 to its tangent parts; a homogeneous top-degree result is
// paired with the fundamental class in the space's orientation, anything
// else is reported as a ring element.
EvalResult eval_expression(const ExprPtr& e, const Space& space);

struct CheckOutcome {
  CheckDecl decl;
  bool pass = false;
  std::string detail;
};

std::vector<CheckOutcome> run_checks(const LoadedDefs& defs);

// the embedded builtin.spaces definition file
const std::string& builtin_defs_text();

}  // namespace chern::dsl
