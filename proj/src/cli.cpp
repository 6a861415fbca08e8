#include "chern/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "chern/catalogue.hpp"
#include "chern/checks.hpp"
#include "chern/dsl.hpp"
#include "chern/riemann_roch.hpp"
#include "chern/rigidity.hpp"
#include "chern/unipoly.hpp"

namespace chern::cli {

namespace {

constexpr const char* kUsage =
    "usage: chern-cli [--defs <path>] <command> [options]\n"
    "\n"
    "commands:\n"
    "  spaces                      list the catalogued spaces\n"
    "  chern <space>               total Chern class of a space\n"
    "  numbers <space>             the 7 Chern numbers of a five-fold\n"
    "  table z | table q           Chern-number tables of the two manifolds\n"
    "  hilbert [--samples N]       Hilbert polynomial of the polarized twistor space\n"
    "  rigidity                    Fano-index case elimination\n"
    "  flip <space> --fiber <expr> conjugate a space along a fiber class\n"
    "  square [--t <expr>]         conjugation square over the vertical class 1+t\n"
    "  eval <expr> --space <s>     evaluate an expression in a space\n"
    "  check all                   run every invariant suite\n"
    "  audit                       literature cross-checks\n"
    "\n"
    "options:\n"
    "  --format text|tsv           table output format (default text)\n"
    "  --defs <path>               definition file overriding the builtin one\n";

struct Options {
  std::string command;
  std::vector<std::string> positional;
  std::string format = "text";
  std::string defs_path;
  std::string fiber;
  std::string t = "h";
  bool t_given = false;
  std::string space;
  long samples = 10;
};

Options parse_args(const std::vector<std::string>& args) {
  Options o;
  size_t i = 0;
  auto value_of = [&](const std::string& flag) {
    if (i + 1 >= args.size())
      throw Error(Errc::usage_error, flag + " needs a value");
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--format") {
      o.format = value_of(a);
      if (o.format != "text" && o.format != "tsv")
        throw Error(Errc::usage_error, "unknown format " + o.format);
    } else if (a == "--defs") {
      o.defs_path = value_of(a);
    } else if (a == "--fiber") {
      o.fiber = value_of(a);
    } else if (a == "--t") {
      o.t = value_of(a);
      o.t_given = true;
    } else if (a == "--space") {
      o.space = value_of(a);
    } else if (a == "--samples") {
      try {
        o.samples = std::stol(value_of(a));
      } catch (...) {
        throw Error(Errc::usage_error, "--samples needs an integer");
      }
      if (o.samples < 0) throw Error(Errc::usage_error, "--samples needs N >= 0");
    } else if (!a.empty() && a[0] == '-') {
      throw Error(Errc::usage_error, "unknown option " + a);
    } else if (o.command.empty()) {
      o.command = a;
    } else {
      o.positional.push_back(a);
    }
  }
  if (o.command.empty()) throw Error(Errc::usage_error, "no command given");
  return o;
}

// Environment shared by the subcommands: the first-principles catalogue and
// the spaces loaded from the definition file, verified against it.
struct Context {
  Catalogue cat;
  dsl::LoadedDefs defs;

  const Space& space(const std::string& name) const {
    if (defs.has_space(name)) return defs.space(name);
    if (cat.has(name)) return cat.by_name(name);
    throw Error(Errc::usage_error, "unknown space " + name);
  }
};

Context load_context(const Options& o) {
  Context ctx;
  ctx.cat = build_standard_spaces();
  std::string text;
  if (o.defs_path.empty()) {
    text = dsl::builtin_defs_text();
  } else {
    std::ifstream in(o.defs_path);
    if (!in) throw Error(Errc::usage_error, "cannot open " + o.defs_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  ctx.defs = dsl::build(dsl::parse(text));
  // a loaded space that names a catalogued one must agree with the
  // first-principles construction
  for (const Space& loaded : ctx.defs.spaces) {
    if (!ctx.cat.has(loaded.name)) continue;
    const Space& built = ctx.cat.by_name(loaded.name);
    if (!loaded.ring->structurally_equal(*built.ring))
      throw Error(Errc::check_failed,
                  "definitions disagree with the computed ring of " + loaded.name);
    if (loaded.tangent != built.tangent || loaded.orientation != built.orientation)
      throw Error(Errc::check_failed,
                  "definitions disagree with the computed classes of " + loaded.name);
  }
  for (const auto& outcome : dsl::run_checks(ctx.defs))
    if (!outcome.pass)
      throw Error(Errc::check_failed,
                  "definition-file check failed on " + outcome.decl.space + ": " +
                      outcome.detail);
  return ctx;
}

// The Z classes are re-derived through the case elimination before anything
// about Z or N is printed.
void verify_z_by_rigidity(const Context& ctx) {
  rigidity::ScanResult res = rigidity::scan(rigidity::standard_input());
  if (res.survivors != std::vector<long>{3})
    throw Error(Errc::check_failed, "rigidity scan does not isolate index 3");
  const Space& z = ctx.cat.by_name("Z");
  for (const auto& rep : res.reports) {
    if (!rep.pass) continue;
    if (rep.c2 != z.tangent.part(2) || rep.c3 != z.tangent.part(3) ||
        rep.c4 != z.tangent.part(4))
      throw Error(Errc::check_failed, "rigidity-derived classes differ from Z");
  }
}

void render_table(std::ostream& out, const std::string& format,
                  const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  if (format == "tsv") {
    for (size_t j = 0; j < header.size(); ++j)
      out << header[j] << (j + 1 < header.size() ? "\t" : "\n");
    for (const auto& row : rows)
      for (size_t j = 0; j < row.size(); ++j)
        out << row[j] << (j + 1 < row.size() ? "\t" : "\n");
    return;
  }
  std::vector<size_t> width(header.size(), 0);
  for (size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& row : rows)
    for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  auto line = [&](const std::vector<std::string>& row) {
    for (size_t j = 0; j < row.size(); ++j) {
      out << row[j];
      if (j + 1 < row.size())
        out << std::string(width[j] - row[j].size() + 2, ' ');
    }
    out << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::vector<std::vector<std::string>> number_rows(
    const Context& ctx, const std::vector<std::string>& names) {
  std::vector<ChernNumberTable> tables;
  for (const auto& name : names) {
    ChernNumberTable t = chern_numbers(ctx.space(name));
    if (!t.all_integral())
      throw Error(Errc::check_failed, name + " has non-integral Chern numbers");
    tables.push_back(t);
  }
  std::vector<std::vector<std::string>> rows;
  for (int i : ChernNumberTable::display_order()) {
    std::vector<std::string> row = {ChernNumberTable::labels()[static_cast<size_t>(i)]};
    for (const auto& t : tables)
      row.push_back(t.values[static_cast<size_t>(i)].to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

// parses `text` with the expression grammar and splits the value into a
// total class whose rank is the top nonzero index
TotalClass class_from_expr(const std::string& text, const Space& space) {
  dsl::Declarations d = dsl::parse("check E : " + text + " = 0;");
  dsl::EvalResult val = dsl::eval_expression(d.checks.at(0).expr, space);
  int top = val.element.top_nonzero_degree();
  return TotalClass::from_element(space.ring, top <= 0 ? 0 : top / 2, val.element);
}

int cmd_spaces(const Context& ctx, std::ostream& out) {
  for (const Space& s : ctx.cat.spaces) {
    out << s.name << ": ";
    const auto& gens = s.ring->presentation().generators;
    out << "ring on ";
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) out << ", ";
      out << gens[i].symbol << " (degree " << gens[i].degree << ")";
    }
    out << "; orientation " << (s.orientation > 0 ? "+1" : "-1") << "; " << s.provenance
        << "\n";
  }
  out << "M: base of the twistor fibration; no ring data is modelled\n";
  return 0;
}

int cmd_chern(const Context& ctx, const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw Error(Errc::usage_error, "chern needs a space name");
  const std::string& name = o.positional[0];
  if (name == "Z" || name == "N") verify_z_by_rigidity(ctx);
  const Space& s = ctx.space(name);
  out << "c(" << s.name << ") = " << s.tangent.to_string() << "\n";
  out << "rank " << s.tangent.rank() << ", orientation "
      << (s.orientation > 0 ? "+1" : "-1") << "\n";
  return 0;
}

int cmd_numbers(const Context& ctx, const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw Error(Errc::usage_error, "numbers needs a space name");
  const std::string& name = o.positional[0];
  const Space& s = ctx.space(name);
  if (s.ring->top_degree() != 10)
    throw Error(Errc::usage_error, name + " is not a five-fold");
  if (name == "Z" || name == "N") verify_z_by_rigidity(ctx);
  render_table(out, o.format, {"monomial", name}, number_rows(ctx, {name}));
  return 0;
}

int cmd_table(const Context& ctx, const Options& o, std::ostream& out) {
  if (o.positional.size() != 1 || (o.positional[0] != "z" && o.positional[0] != "q"))
    throw Error(Errc::usage_error, "table needs 'z' or 'q'");
  verify_z_by_rigidity(ctx);
  std::vector<std::string> names = o.positional[0] == "z"
                                       ? std::vector<std::string>{"Z", "N"}
                                       : std::vector<std::string>{"Q", "PTS6", "PTstarS6", "X"};
  std::vector<std::string> header = {"monomial"};
  header.insert(header.end(), names.begin(), names.end());
  render_table(out, o.format, header, number_rows(ctx, names));
  return 0;
}

int cmd_hilbert(const Context& ctx, const Options& o, std::ostream& out) {
  verify_z_by_rigidity(ctx);
  const Space& z = ctx.cat.by_name("Z");
  RingElement line = z.ring->generator("L");
  UniPoly p = hilbert_polynomial(z, line);
  out << "P(r) = " << p.to_string() << "\n";
  auto cmp = compare_with_product_form(p);
  out << "product form (r+2)(3r+5)(2r+3)(3r+4)(r+1)/120: "
      << (cmp.equal ? "equal" : "DIFFERS") << "\n";
  auto rep = extract_chern_data(p, z);
  out << "c1^5 from the r^5 coefficient: " << rep.c15_from_r5.to_string()
      << " (r^4 cross-check: " << rep.c15_from_r4.to_string() << ", "
      << (rep.r4_consistent ? "consistent" : "INCONSISTENT") << ")\n";
  out << "c1^3c2 from the r^3 coefficient: " << rep.c13c2.to_string() << "\n";
  bool all_integer = true;
  out << "values at r = 0.." << o.samples << ":";
  for (long r = 0; r <= o.samples; ++r) {
    Rational v = p.eval(Rational(r));
    all_integer = all_integer && v.is_integer();
    out << " " << v.to_string();
  }
  out << "\n";
  if (!cmp.equal || !rep.r4_consistent || !all_integer)
    throw Error(Errc::check_failed, "Hilbert polynomial checks failed");
  out << "all sampled values are integers\n";
  return 0;
}

int cmd_rigidity(const Options& o, std::ostream& out) {
  rigidity::TopologicalInput in = rigidity::standard_input();
  rigidity::ScanResult res = rigidity::scan(in);
  std::vector<std::vector<std::string>> rows;
  for (const auto& rep : res.reports)
    rows.push_back({std::to_string(rep.d), rep.pass ? "pass" : "fail",
                    rigidity::fail_reason_name(rep.reason), rep.pontryagin_lhs.to_string(),
                    rep.todd_rhs.to_string()});
  render_table(out, o.format, {"d", "verdict", "fail_reason", "pontryagin_lhs", "todd_rhs"},
               rows);
  if (o.format != "tsv") {
    auto pruned = rigidity::pruned_positive_divisors(in);
    if (!pruned.empty()) {
      out << "positive divisors excluded before the scan:";
      for (const auto& [d, reason] : pruned) out << " " << d;
      out << " (index_bound_excluded)\n";
    }
    for (const auto& rep : res.reports)
      for (const auto& note : rep.notes) out << "note (d = " << rep.d << "): " << note << "\n";
    out << "survivors:";
    for (long d : res.survivors) out << " " << d;
    out << "\n";
  }
  if (res.survivors != std::vector<long>{3})
    throw Error(Errc::check_failed, "rigidity scan does not isolate index 3");
  return 0;
}

int cmd_flip(const Context& ctx, const Options& o, std::ostream& out) {
  if (o.positional.size() != 1 || o.fiber.empty())
    throw Error(Errc::usage_error, "flip needs a space name and --fiber <expr>");
  const Space& s = ctx.space(o.positional[0]);
  TotalClass fiber = class_from_expr(o.fiber, s);
  Space flipped = flip(s, fiber);
  out << "c = " << flipped.tangent.to_string() << "\n";
  out << "orientation " << (flipped.orientation > 0 ? "+1" : "-1") << "\n";
  for (const Space& candidate : ctx.cat.spaces) {
    if (candidate.ring->top_degree() != s.ring->top_degree()) continue;
    MatchReport m = match_up_to_symmetry(flipped, candidate);
    if (m.matched && m.orientation_agrees) {
      out << "matches " << candidate.name << " (generator sign "
          << (m.generator_sign > 0 ? "+1" : "-1") << ", "
          << (m.globally_conjugated ? "conjugated" : "not conjugated") << ")\n";
      return 0;
    }
  }
  out << "matches no catalogued space\n";
  return 0;
}

int cmd_square(const Context& ctx, const Options& o, std::ostream& out) {
  const Space& q = ctx.cat.by_name("Q");
  dsl::Declarations d = dsl::parse("check E : " + o.t + " = 0;");
  dsl::EvalResult val = dsl::eval_expression(d.checks.at(0).expr, q);
  Figure3Report rep = figure3_square(ctx.cat, val.element);
  auto corner = [&](const char* role, const Space& s, const std::string& match) {
    out << role << ": c = " << s.tangent.to_string() << ", orientation "
        << (s.orientation > 0 ? "+1" : "-1")
        << (match.empty() ? std::string(", matches no catalogued space")
                          : ", matches " + match)
        << "\n";
  };
  corner("Q", rep.corner_q, rep.match_q);
  corner("flip over S6", rep.corner_a, rep.match_a);
  corner("flip over M", rep.corner_b, rep.match_b);
  if (rep.commutes) {
    corner("both flips", rep.corner_c, rep.match_cd);
    out << "square commutes\n";
    return 0;
  }
  corner("vertical then horizontal", rep.corner_c, rep.match_cd);
  corner("horizontal then vertical", rep.corner_d, "");
  out << "square DOES NOT COMMUTE\n";
  throw Error(Errc::check_failed, "conjugation square does not commute");
  return 0;
}

int cmd_eval(const Context& ctx, const Options& o, std::ostream& out) {
  if (o.positional.size() != 1 || o.space.empty())
    throw Error(Errc::usage_error, "eval needs an expression and --space <name>");
  const Space& s = ctx.space(o.space);
  dsl::Declarations d = dsl::parse("check E : " + o.positional[0] + " = 0;");
  dsl::EvalResult val = dsl::eval_expression(d.checks.at(0).expr, s);
  if (val.is_number)
    out << "number: " << val.number.to_string() << "\n";
  else
    out << "element: " << val.element.to_string() << "\n";
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1 || o.positional[0] != "all")
    throw Error(Errc::usage_error, "only 'check all' is available");
  auto results = checks::run_all();
  bool ok = true;
  for (const auto& r : results) {
    out << (r.pass ? "ok   " : "FAIL ") << r.name;
    if (!r.pass) out << ": " << r.detail;
    out << "\n";
  }
  ok = checks::all_passed(results);
  out << (ok ? "all checks passed" : "checks FAILED") << "\n";
  if (!ok) throw Error(Errc::check_failed, "invariant suites failed");
  return 0;
}

int cmd_audit(const Context& ctx, std::ostream& out) {
  const Space& z = ctx.cat.by_name("Z");
  RingElement L = z.ring->generator("L");
  bool ok = true;

  auto ch = chern_character(z.tangent);
  auto [p1, p2] = pontryagin(z.tangent);
  ok = ok && ch[2] == Rational(1, 6) * L.pow(2) && ch[2] == Rational(1, 2) * p1;
  out << "audit: ch2(Z) = " << ch[2].to_string() << " = p1(Z)/2; the value 1/2*L^2 "
      << "reported elsewhere is "
      << (ch[2] == Rational(1, 2) * L.pow(2) ? "confirmed" : "refuted") << "\n";

  Rational c15 = chern_numbers(z).by_label("c1^5");
  Rational expected15 = Rational(18) * Rational(3).pow(5);
  ok = ok && c15 == expected15 && c15 == Rational(4374);
  out << "audit: c1^5(Z) = " << c15.to_string() << " = 18*3^5"
      << "; the figure 4373 appearing in print is off by one\n";

  bool p1z_generator = p1 == z.ring->lattice_generators(4).front();
  const Space& q = ctx.cat.by_name("Q");
  auto [p1q, p2q] = pontryagin(q.tangent);
  bool p1q_triple = p1q == Rational(3) * (q.ring->generator("h").pow(2));
  ok = ok && p1z_generator && p1q_triple;
  out << "audit: p1(Z) = " << p1.to_string() << " is the degree-4 lattice generator; "
      << "p1(Q) = " << p1q.to_string() << " is 3 times the generator, so a claim that "
      << "it generates is a misprint\n";

  const Space& s6 = ctx.cat.by_name("S6");
  Rational chi_s6 = s6.ring->evaluate_top(s6.tangent.part(3), +1);
  ok = ok && chi_s6 == Rational(2);
  for (const char* name : {"PTS6", "PTstarS6"}) {
    ChernNumberTable t = chern_numbers(ctx.cat.by_name(name));
    out << "audit: " << name << " Chern numbers are c3(S6) = " << chi_s6.to_string()
        << " times (";
    const auto& order = ChernNumberTable::display_order();
    for (int i = 0; i < ChernNumberTable::kCount; ++i) {
      Rational multiple = t.values[static_cast<size_t>(order[static_cast<size_t>(i)])] / chi_s6;
      ok = ok && multiple.is_integer();
      out << (i ? ", " : "") << multiple.to_string();
    }
    out << ")\n";
  }

  if (!ok) throw Error(Errc::check_failed, "audit found a failing cross-check");
  out << "audit: ok\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Options o = parse_args(args);
    if (o.command == "help" || o.command == "--help") {
      out << kUsage;
      return 0;
    }
    if (o.command == "check") return cmd_check(o, out);
    if (o.command == "rigidity") return cmd_rigidity(o, out);

    const char* known[] = {"spaces", "chern", "numbers", "table", "hilbert",
                           "flip",   "square", "eval",    "audit"};
    if (std::find(std::begin(known), std::end(known), o.command) == std::end(known))
      throw Error(Errc::usage_error, "unknown command " + o.command);

    Context ctx = load_context(o);
    if (o.command == "spaces") return cmd_spaces(ctx, out);
    if (o.command == "chern") return cmd_chern(ctx, o, out);
    if (o.command == "numbers") return cmd_numbers(ctx, o, out);
    if (o.command == "table") return cmd_table(ctx, o, out);
    if (o.command == "hilbert") return cmd_hilbert(ctx, o, out);
    if (o.command == "flip") return cmd_flip(ctx, o, out);
    if (o.command == "square") return cmd_square(ctx, o, out);
    if (o.command == "eval") return cmd_eval(ctx, o, out);
    return cmd_audit(ctx, out);
  } catch (const Error& e) {
    std::string loc;
    if (e.location())
      loc = " at line " + std::to_string(e.location()->line) + ", column " +
            std::to_string(e.location()->column);
    err << "chern-cli: error: " << errc_name(e.code()) << loc << ": " << e.what() << "\n";
    switch (e.code()) {
      case Errc::usage_error: return 1;
      case Errc::parse_error: return 2;
      default: return 3;
    }
  } catch (const std::exception& e) {
    err << "chern-cli: error: internal: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace chern::cli
