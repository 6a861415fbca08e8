#include "chern/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace chern::dsl {

// ---------------------------------------------------------------------------
// lexer

namespace {

enum class Tok {
  ident, integer,
  lbrace, rbrace, lparen, rparen,
  colon, semicolon, equal, plus, minus, star, slash, caret,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  BigInt value;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.loc = loc();
      if (pos_ >= text_.size()) {
        t.kind = Tok::end;
        out.push_back(t);
        return out;
      }
      char ch = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          advance();
        t.kind = Tok::ident;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          advance();
        t.kind = Tok::integer;
        t.text = std::string(text_.substr(start, pos_ - start));
        t.value = BigInt(t.text);
      } else {
        switch (ch) {
          case '{': t.kind = Tok::lbrace; break;
          case '}': t.kind = Tok::rbrace; break;
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          case ':': t.kind = Tok::colon; break;
          case ';': t.kind = Tok::semicolon; break;
          case '=': t.kind = Tok::equal; break;
          case '+': t.kind = Tok::plus; break;
          case '-': t.kind = Tok::minus; break;
          case '*': t.kind = Tok::star; break;
          case '/': t.kind = Tok::slash; break;
          case '^': t.kind = Tok::caret; break;
          default:
            throw Error(Errc::parse_error, loc(),
                        std::string("unexpected character '") + ch + "'");
        }
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  SourceLoc loc() const { return {line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---------------------------------------------------------------------------
// parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Declarations run() {
    Declarations d;
    std::set<std::string> names;
    while (peek().kind != Tok::end) {
      const Token& t = expect_ident("declaration keyword");
      if (t.text == "space") {
        SpaceDecl s = parse_space();
        if (!names.insert(s.name).second)
          throw Error(Errc::parse_error, s.loc, "duplicate name " + s.name);
        d.order.emplace_back('s', d.spaces.size());
        d.spaces.push_back(std::move(s));
      } else if (t.text == "bundle") {
        BundleDecl b = parse_bundle();
        if (!names.insert(b.name).second)
          throw Error(Errc::parse_error, b.loc, "duplicate name " + b.name);
        d.order.emplace_back('b', d.bundles.size());
        d.bundles.push_back(std::move(b));
      } else if (t.text == "check") {
        d.order.emplace_back('c', d.checks.size());
        d.checks.push_back(parse_check());
      } else {
        throw Error(Errc::parse_error, t.loc,
                    "expected 'space', 'bundle' or 'check', got '" + t.text + "'");
      }
    }
    return d;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = next();
    if (t.kind != kind)
      throw Error(Errc::parse_error, t.loc, "expected " + what);
    return t;
  }
  const Token& expect_ident(const std::string& what) { return expect(Tok::ident, what); }

  int expect_int(const std::string& what) {
    const Token& t = expect(Tok::integer, what);
    if (!t.value.fits_sint_p())
      throw Error(Errc::parse_error, t.loc, what + " out of range");
    return static_cast<int>(t.value.get_si());
  }

  int parse_signed_one() {
    const Token& s = next();
    int sign;
    if (s.kind == Tok::plus)
      sign = +1;
    else if (s.kind == Tok::minus)
      sign = -1;
    else
      throw Error(Errc::parse_error, s.loc, "expected +1 or -1");
    const Token& t = expect(Tok::integer, "1 after sign");
    if (t.value != 1)
      throw Error(Errc::parse_error, t.loc, "orientation must be +1 or -1");
    return sign;
  }

  MonomialText parse_monomial() {
    MonomialText m;
    for (;;) {
      const Token& id = expect_ident("generator symbol");
      int e = 1;
      if (peek().kind == Tok::caret) {
        next();
        e = expect_int("exponent");
        if (e < 0) throw Error(Errc::parse_error, id.loc, "exponent must be nonnegative");
      }
      m.emplace_back(id.text, e);
      if (peek().kind != Tok::star) return m;
      next();
    }
  }

  SpaceDecl parse_space() {
    SpaceDecl s;
    const Token& name = expect_ident("space name");
    s.name = name.text;
    s.loc = name.loc;
    expect(Tok::lbrace, "'{'");
    while (peek().kind != Tok::rbrace) {
      const Token& kw = expect_ident("space clause");
      if (kw.text == "generator") {
        GeneratorSpec g;
        g.symbol = expect_ident("generator symbol").text;
        expect(Tok::colon, "':'");
        g.degree = expect_int("generator degree");
        s.generators.push_back(std::move(g));
      } else if (kw.text == "relation") {
        RelationClause r;
        r.loc = kw.loc;
        r.lhs = parse_monomial();
        expect(Tok::equal, "'='");
        r.rhs = parse_expr();
        s.relations.push_back(std::move(r));
      } else if (kw.text == "lattice") {
        LatticeClause l;
        l.loc = kw.loc;
        l.degree = expect_int("lattice degree");
        expect(Tok::colon, "':'");
        l.expr = parse_expr();
        s.lattice.push_back(std::move(l));
      } else if (kw.text == "fundamental") {
        FundamentalClause f;
        f.loc = kw.loc;
        f.monomial = parse_monomial();
        expect(Tok::equal, "'='");
        f.value = parse_rational_value();
        s.fundamental.push_back(std::move(f));
      } else if (kw.text == "orientation") {
        s.orientation = parse_signed_one();
      } else if (kw.text == "chern") {
        s.chern = parse_expr();
      } else {
        throw Error(Errc::parse_error, kw.loc, "unknown clause '" + kw.text + "'");
      }
      expect(Tok::semicolon, "';'");
    }
    expect(Tok::rbrace, "'}'");
    if (!s.chern)
      throw Error(Errc::parse_error, s.loc, "space " + s.name + " has no chern clause");
    if (s.fundamental.empty())
      throw Error(Errc::parse_error, s.loc,
                  "space " + s.name + " has no fundamental clause");
    return s;
  }

  BundleDecl parse_bundle() {
    BundleDecl b;
    const Token& name = expect_ident("bundle name");
    b.name = name.text;
    b.loc = name.loc;
    if (expect_ident("'over'").text != "over")
      throw Error(Errc::parse_error, b.loc, "expected 'over'");
    b.over = expect_ident("space name").text;
    if (expect_ident("'rank'").text != "rank")
      throw Error(Errc::parse_error, b.loc, "expected 'rank'");
    b.rank = expect_int("rank");
    if (expect_ident("'chern'").text != "chern")
      throw Error(Errc::parse_error, b.loc, "expected 'chern'");
    b.chern = parse_expr();
    expect(Tok::semicolon, "';'");
    return b;
  }

  CheckDecl parse_check() {
    CheckDecl c;
    const Token& sp = expect_ident("space name");
    c.space = sp.text;
    c.loc = sp.loc;
    expect(Tok::colon, "':'");
    c.expr = parse_expr();
    expect(Tok::equal, "'='");
    c.expected = parse_expr();
    expect(Tok::semicolon, "';'");
    return c;
  }

  Rational parse_rational_value() {
    // sign? INT (/ INT)?
    SourceLoc loc = peek().loc;
    bool negative = false;
    if (peek().kind == Tok::minus) {
      negative = true;
      next();
    } else if (peek().kind == Tok::plus) {
      next();
    }
    const Token& num = expect(Tok::integer, "rational value");
    BigInt n = num.value;
    BigInt den = 1;
    if (peek().kind == Tok::slash) {
      next();
      den = expect(Tok::integer, "denominator").value;
      if (sgn(den) == 0) throw Error(Errc::parse_error, loc, "zero denominator");
    }
    Rational r(n, den);
    return negative ? -r : r;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = next();
      ExprPtr rhs = parse_term();
      auto node = std::make_shared<Expr>();
      node->kind = op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub;
      node->lhs = lhs;
      node->rhs = rhs;
      node->loc = op.loc;
      lhs = node;
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = next();
      ExprPtr rhs = parse_factor();
      auto node = std::make_shared<Expr>();
      node->kind = op.kind == Tok::star ? Expr::Kind::mul : Expr::Kind::div;
      node->lhs = lhs;
      node->rhs = rhs;
      node->loc = op.loc;
      lhs = node;
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    if (peek().kind == Tok::minus) {
      const Token& op = next();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::neg;
      node->operand = parse_factor();
      node->loc = op.loc;
      return node;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (peek().kind != Tok::caret) return base;
    const Token& op = next();
    int e = expect_int("exponent");
    if (e < 0) throw Error(Errc::parse_error, op.loc, "exponent must be nonnegative");
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::pow;
    node->operand = base;
    node->exponent = e;
    node->loc = op.loc;
    return node;
  }

  ExprPtr parse_atom() {
    const Token& t = next();
    auto node = std::make_shared<Expr>();
    node->loc = t.loc;
    if (t.kind == Tok::integer) {
      node->kind = Expr::Kind::integer;
      node->value = t.value;
      return node;
    }
    if (t.kind == Tok::ident) {
      node->kind = Expr::Kind::symbol;
      node->name = t.text;
      return node;
    }
    if (t.kind == Tok::lparen) {
      ExprPtr inner = parse_expr();
      expect(Tok::rparen, "')'");
      return inner;
    }
    throw Error(Errc::parse_error, t.loc, "expected a number, symbol or '('");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

Declarations parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

// ---------------------------------------------------------------------------
// printing

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::integer: return a->value == b->value;
    case Expr::Kind::symbol: return a->name == b->name;
    case Expr::Kind::add:
    case Expr::Kind::sub:
    case Expr::Kind::mul:
    case Expr::Kind::div:
      return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    case Expr::Kind::neg: return expr_equal(a->operand, b->operand);
    case Expr::Kind::pow:
      return a->exponent == b->exponent && expr_equal(a->operand, b->operand);
  }
  return false;
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    case Expr::Kind::integer:
    case Expr::Kind::symbol: return 5;
  }
  return 5;
}

void print_rec(const Expr& e, int parent_prec, std::string& out) {
  int prec = precedence(e);
  bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (e.kind) {
    case Expr::Kind::integer:
      out += e.value.get_str();
      break;
    case Expr::Kind::symbol:
      out += e.name;
      break;
    case Expr::Kind::add:
    case Expr::Kind::sub:
      print_rec(*e.lhs, prec, out);
      out += e.kind == Expr::Kind::add ? " + " : " - ";
      print_rec(*e.rhs, prec + 1, out);
      break;
    case Expr::Kind::mul:
    case Expr::Kind::div:
      print_rec(*e.lhs, prec, out);
      out += e.kind == Expr::Kind::mul ? "*" : "/";
      print_rec(*e.rhs, prec + 1, out);
      break;
    case Expr::Kind::neg:
      out += "-";
      print_rec(*e.operand, prec, out);
      break;
    case Expr::Kind::pow:
      print_rec(*e.operand, prec + 1, out);
      out += "^" + std::to_string(e.exponent);
      break;
  }
  if (parens) out += ")";
}

std::string print_monomial(const MonomialText& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += "*";
    out += m[i].first;
    if (m[i].second != 1) out += "^" + std::to_string(m[i].second);
  }
  return out;
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  std::string out;
  if (e) print_rec(*e, 0, out);
  return out;
}

std::string print(const Declarations& d) {
  std::string out;
  char prev = 0;
  for (const auto& [tag, idx] : d.order) {
    if (prev != 0 && (prev == 's' || tag == 's' || prev != tag)) out += "\n";
    prev = tag;
    if (tag == 's') {
      const SpaceDecl& s = d.spaces[idx];
      out += "space " + s.name + " {\n";
      for (const auto& g : s.generators)
        out += "  generator " + g.symbol + " : " + std::to_string(g.degree) + ";\n";
      for (const auto& r : s.relations)
        out += "  relation " + print_monomial(r.lhs) + " = " + print_expr(r.rhs) + ";\n";
      for (const auto& l : s.lattice)
        out += "  lattice " + std::to_string(l.degree) + " : " + print_expr(l.expr) + ";\n";
      for (const auto& f : s.fundamental)
        out += "  fundamental " + print_monomial(f.monomial) + " = " +
               f.value.to_string() + ";\n";
      out += std::string("  orientation ") + (s.orientation > 0 ? "+1" : "-1") + ";\n";
      out += "  chern " + print_expr(s.chern) + ";\n";
      out += "}\n";
    } else if (tag == 'b') {
      const BundleDecl& b = d.bundles[idx];
      out += "bundle " + b.name + " over " + b.over + " rank " + std::to_string(b.rank) +
             " chern " + print_expr(b.chern) + ";\n";
    } else {
      const CheckDecl& c = d.checks[idx];
      out += "check " + c.space + " : " + print_expr(c.expr) + " = " +
             print_expr(c.expected) + ";\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// building

namespace {

bool is_chern_symbol(const std::string& name, int* index) {
  if (name.size() < 2 || name[0] != 'c') return false;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  *index = std::stoi(name.substr(1));
  return true;
}

// expansion of an expression into a monomial combination, with no ring
// reduction; used for relation right-hand sides and lattice clauses
using FreePoly = std::map<Monomial, Rational>;

FreePoly free_scalar(const Rational& r, size_t n) {
  FreePoly p;
  if (!r.is_zero()) p[Monomial(n, 0)] = r;
  return p;
}

FreePoly free_mul(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = out.try_emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

FreePoly free_expand(const Expr& e, const std::vector<GeneratorSpec>& gens) {
  const size_t n = gens.size();
  switch (e.kind) {
    case Expr::Kind::integer:
      return free_scalar(Rational(e.value), n);
    case Expr::Kind::symbol: {
      for (size_t i = 0; i < n; ++i) {
        if (gens[i].symbol == e.name) {
          Monomial m(n, 0);
          m[i] = 1;
          FreePoly p;
          p[m] = Rational(1);
          return p;
        }
      }
      throw Error(Errc::unknown_symbol, e.loc, "unknown symbol " + e.name);
    }
    case Expr::Kind::add: {
      FreePoly a = free_expand(*e.lhs, gens);
      for (const auto& [m, c] : free_expand(*e.rhs, gens)) {
        auto [it, inserted] = a.try_emplace(m, c);
        if (!inserted) it->second += c;
      }
      std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
      return a;
    }
    case Expr::Kind::sub: {
      FreePoly a = free_expand(*e.lhs, gens);
      for (const auto& [m, c] : free_expand(*e.rhs, gens)) {
        auto [it, inserted] = a.try_emplace(m, -c);
        if (!inserted) it->second -= c;
      }
      std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
      return a;
    }
    case Expr::Kind::mul:
      return free_mul(free_expand(*e.lhs, gens), free_expand(*e.rhs, gens));
    case Expr::Kind::div: {
      // divisor must expand to a scalar
      FreePoly b = free_expand(*e.rhs, gens);
      bool scalar = b.empty() ||
                    (b.size() == 1 &&
                     std::all_of(b.begin()->first.begin(), b.begin()->first.end(),
                                 [](unsigned x) { return x == 0; }));
      if (!scalar)
        throw Error(Errc::parse_error, e.loc, "division by a non-scalar expression");
      Rational divisor = b.empty() ? Rational(0) : b.begin()->second;
      if (divisor.is_zero())
        throw Error(Errc::division_by_zero, e.loc, "division by zero");
      FreePoly a = free_expand(*e.lhs, gens);
      for (auto& [m, c] : a) c /= divisor;
      return a;
    }
    case Expr::Kind::neg: {
      FreePoly a = free_expand(*e.operand, gens);
      for (auto& [m, c] : a) c = -c;
      return a;
    }
    case Expr::Kind::pow: {
      FreePoly base = free_expand(*e.operand, gens);
      FreePoly acc = free_scalar(Rational(1), n);
      for (int i = 0; i < e.exponent; ++i) acc = free_mul(acc, base);
      return acc;
    }
  }
  throw Error(Errc::parse_error, e.loc, "malformed expression");
}

MonomialCombo to_combo(const FreePoly& p) {
  MonomialCombo out;
  for (const auto& [m, c] : p) out.emplace_back(c, m);
  return out;
}

Monomial monomial_from_text(const MonomialText& text,
                            const std::vector<GeneratorSpec>& gens, SourceLoc loc) {
  Monomial m(gens.size(), 0);
  for (const auto& [sym, exp] : text) {
    bool found = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].symbol == sym) {
        m[i] += static_cast<unsigned>(exp);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::unknown_symbol, loc, "unknown generator " + sym);
  }
  return m;
}

}  // namespace

LoadedDefs build(const Declarations& d) {
  LoadedDefs out;
  for (const SpaceDecl& s : d.spaces) {
    for (const auto& g : s.generators) {
      int ci = 0;
      if (is_chern_symbol(g.symbol, &ci))
        throw Error(Errc::parse_error, s.loc,
                    "generator name " + g.symbol + " is reserved for Chern symbols");
    }
    RingPresentation p;
    p.name = "H*(" + s.name + ")";
    p.generators = s.generators;
    for (const auto& r : s.relations) {
      RewriteRule rule;
      rule.lhs = monomial_from_text(r.lhs, s.generators, r.loc);
      rule.rhs = to_combo(free_expand(*r.rhs, s.generators));
      p.rules.push_back(std::move(rule));
    }
    if (s.fundamental.empty())
      throw Error(Errc::parse_error, s.loc, "space needs a fundamental clause");
    int top = -1;
    for (const auto& f : s.fundamental) {
      Monomial m = monomial_from_text(f.monomial, s.generators, f.loc);
      int deg = 0;
      for (size_t i = 0; i < m.size(); ++i)
        deg += static_cast<int>(m[i]) * s.generators[i].degree;
      if (top < 0) top = deg;
      if (deg != top)
        throw Error(Errc::degree_mismatch, f.loc,
                    "fundamental monomials must share one top degree");
      p.fundamental.emplace_back(std::move(m), f.value);
    }
    p.top_degree = top;
    std::map<int, std::vector<MonomialCombo>> lattice_by_degree;
    for (const auto& l : s.lattice)
      lattice_by_degree[l.degree].push_back(to_combo(free_expand(*l.expr, s.generators)));
    for (auto& [deg, combos] : lattice_by_degree) p.lattice.emplace_back(deg, combos);

    RingPtr ring;
    try {
      ring = Ring::make(std::move(p));
    } catch (const Error& e) {
      if (e.location()) throw;
      throw Error(e.code(), s.loc, "space " + s.name + ": " + e.what());
    }
    RingElement chern_elem = ring->element(to_combo(free_expand(*s.chern, s.generators)));
    TotalClass tangent =
        TotalClass::from_element(ring, ring->top_degree() / 2, chern_elem);
    out.spaces.push_back(Space{s.name, ring, tangent, s.orientation,
                               "definition file"});
  }
  for (const BundleDecl& b : d.bundles) {
    if (!out.has_space(b.over))
      throw Error(Errc::unknown_symbol, b.loc, "bundle over unknown space " + b.over);
    if (b.rank < 0) throw Error(Errc::parse_error, b.loc, "bundle rank must be >= 0");
    const Space& host = out.space(b.over);
    RingElement e = host.ring->element(
        to_combo(free_expand(*b.chern, host.ring->presentation().generators)));
    TotalClass cls = TotalClass::from_element(host.ring, b.rank, e);
    if (!cls.vanishes_above_rank())
      throw Error(Errc::inhomogeneous_class, b.loc,
                  "bundle class has parts above its rank");
    out.bundles.emplace(b.name, std::move(cls));
  }
  out.checks = d.checks;
  return out;
}

bool LoadedDefs::has_space(const std::string& name) const {
  return std::any_of(spaces.begin(), spaces.end(),
                     [&](const Space& s) { return s.name == name; });
}

const Space& LoadedDefs::space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name == name) return s;
  throw Error(Errc::unknown_symbol, "no space named " + name);
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

RingElement eval_element(const Expr& e, const Space& space) {
  const RingPtr& ring = space.ring;
  switch (e.kind) {
    case Expr::Kind::integer:
      return ring->scalar(Rational(e.value));
    case Expr::Kind::symbol: {
      int ci = 0;
      if (is_chern_symbol(e.name, &ci)) {
        if (ci > space.tangent.top_index())
          throw Error(Errc::unknown_symbol, e.loc,
                      e.name + " exceeds the truncation index");
        return space.tangent.part(ci);
      }
      try {
        return ring->generator(e.name);
      } catch (const Error&) {
        throw Error(Errc::unknown_symbol, e.loc, "unknown symbol " + e.name);
      }
    }
    case Expr::Kind::add: return eval_element(*e.lhs, space) + eval_element(*e.rhs, space);
    case Expr::Kind::sub: return eval_element(*e.lhs, space) - eval_element(*e.rhs, space);
    case Expr::Kind::mul: return eval_element(*e.lhs, space) * eval_element(*e.rhs, space);
    case Expr::Kind::div: {
      RingElement divisor = eval_element(*e.rhs, space);
      if (!divisor.is_homogeneous(0))
        throw Error(Errc::parse_error, e.loc, "division by a non-scalar expression");
      Rational q = divisor.components()[0][0];
      if (q.is_zero()) throw Error(Errc::division_by_zero, e.loc, "division by zero");
      return (Rational(1) / q) * eval_element(*e.lhs, space);
    }
    case Expr::Kind::neg: return -eval_element(*e.operand, space);
    case Expr::Kind::pow:
      return eval_element(*e.operand, space).pow(static_cast<unsigned>(e.exponent));
  }
  throw Error(Errc::parse_error, e.loc, "malformed expression");
}

}  // namespace

EvalResult eval_expression(const ExprPtr& e, const Space& space) {
  EvalResult out;
  out.element = eval_element(*e, space);
  if (out.element.is_zero()) {
    out.is_number = true;
    out.number = Rational(0);
  } else if (out.element.is_homogeneous(space.ring->top_degree())) {
    out.is_number = true;
    out.number = space.ring->evaluate_top(out.element, space.orientation);
  }
  return out;
}

std::vector<CheckOutcome> run_checks(const LoadedDefs& defs) {
  std::vector<CheckOutcome> out;
  for (const CheckDecl& c : defs.checks) {
    CheckOutcome o;
    o.decl = c;
    try {
      const Space& sp = defs.space(c.space);
      EvalResult lhs = eval_expression(c.expr, sp);
      RingElement expected_elem = eval_element(*c.expected, sp);
      if (!expected_elem.is_homogeneous(0))
        throw Error(Errc::parse_error, c.loc, "expected value must be rational");
      Rational expected = expected_elem.components()[0][0];
      if (!lhs.is_number) {
        o.pass = false;
        o.detail = "expression is not a top-degree pairing: " + lhs.element.to_string();
      } else if (lhs.number != expected) {
        o.pass = false;
        o.detail = "got " + lhs.number.to_string() + ", expected " + expected.to_string();
      } else {
        o.pass = true;
      }
    } catch (const Error& e) {
      o.pass = false;
      o.detail = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace chern::dsl
