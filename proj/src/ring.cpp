#include "chern/ring.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace chern {

namespace {

constexpr long kRewriteFuel = 200000;

bool divides(const Monomial& lhs, const Monomial& m) {
  for (size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] > m[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial mono_div(const Monomial& m, const Monomial& lhs) {
  Monomial out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = m[i] - lhs[i];
  return out;
}

bool mono_is_one(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

// Solves A z = v over the rationals; A given by columns. Returns nullopt if
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_columns(
    const std::vector<std::vector<Rational>>& columns,
    const std::vector<Rational>& v) {
  const size_t rows = v.size();
  const size_t cols = columns.size();
  // augmented matrix
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows; ++i) m[i][j] = columns[j][i];
  for (size_t i = 0; i < rows; ++i) m[i][cols] = v[i];

  std::vector<size_t> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j <= cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;
  std::vector<Rational> z(cols, Rational(0));
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
    z[pivot_col_of_row[i]] = m[i][cols];
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingElement

bool RingElement::is_zero() const {
  for (const auto& row : comps_)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

RingElement RingElement::part(int degree) const {
  RingElement out = ring_->zero();
  int di = degree / 2;
  if (degree >= 0 && degree % 2 == 0 && di < static_cast<int>(comps_.size()))
    out.comps_[static_cast<size_t>(di)] = comps_[static_cast<size_t>(di)];
  return out;
}

bool RingElement::is_homogeneous(int degree) const {
  for (size_t di = 0; di < comps_.size(); ++di)
    for (const auto& c : comps_[di])
      if (!c.is_zero() && static_cast<int>(di) * 2 != degree) return false;
  return true;
}

int RingElement::top_nonzero_degree() const {
  for (size_t di = comps_.size(); di-- > 0;)
    for (const auto& c : comps_[di])
      if (!c.is_zero()) return static_cast<int>(di) * 2;
  return -1;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& row : out.comps_)
    for (auto& c : row) c = -c;
  return out;
}

namespace {
void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!a.ring() || !b.ring() || a.ring().get() != b.ring().get())
    throw Error(Errc::ring_mismatch, "elements of different rings");
}
}  // namespace

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_ring(*this, o);
  for (size_t di = 0; di < comps_.size(); ++di)
    for (size_t j = 0; j < comps_[di].size(); ++j) comps_[di][j] += o.comps_[di][j];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same_ring(*this, o);
  for (size_t di = 0; di < comps_.size(); ++di)
    for (size_t j = 0; j < comps_[di].size(); ++j) comps_[di][j] -= o.comps_[di][j];
  return *this;
}

RingElement operator*(const Rational& s, RingElement a) {
  for (auto& row : a.comps_)
    for (auto& c : row) c *= s;
  return a;
}

RingElement RingElement::pow(unsigned e) const {
  RingElement acc = ring_->one();
  RingElement base = *this;
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (!a.ring_ && !b.ring_) return true;
  if (!a.ring_ || !b.ring_) return false;
  if (a.ring_.get() != b.ring_.get() && !a.ring_->structurally_equal(*b.ring_))
    return false;
  return a.comps_ == b.comps_;
}

std::string RingElement::to_string() const {
  if (!ring_ || is_zero()) return "0";
  std::string out;
  for (size_t di = 0; di < comps_.size(); ++di) {
    const auto& names = ring_->basis(static_cast<int>(di) * 2);
    for (size_t j = 0; j < comps_[di].size(); ++j) {
      const Rational& c = comps_[di][j];
      if (c.is_zero()) continue;
      Rational a = c;
      if (out.empty()) {
        if (a.sign() < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0) a = -a;
      }
      std::string mono = ring_->monomial_name(names[j]);
      if (mono == "1") {
        out += a.to_string();
      } else if (a == Rational(1)) {
        out += mono;
      } else {
        out += a.to_string() + "*" + mono;
      }
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Ring

int Ring::degree_of(const Monomial& m) const {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i)
    d += static_cast<int>(m[i]) * pres_.generators[i].degree;
  return d;
}

void Ring::build_basis() {
  basis_.assign(static_cast<size_t>(degree_count()), {});
  const size_t n = pres_.generators.size();
  Monomial cur(n, 0);
  // enumerate all monomials of degree <= top_degree
  auto rec = [&](auto&& self, size_t i, int deg) -> void {
    if (i == n) {
      bool reducible = false;
      for (const auto& rule : pres_.rules)
        if (divides(rule.lhs, cur)) {
          reducible = true;
          break;
        }
      if (!reducible) basis_[static_cast<size_t>(deg / 2)].push_back(cur);
      return;
    }
    int gd = pres_.generators[i].degree;
    for (unsigned e = 0; deg + static_cast<int>(e) * gd <= pres_.top_degree; ++e) {
      cur[i] = e;
      self(self, i + 1, deg + static_cast<int>(e) * gd);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
  for (auto& row : basis_) std::sort(row.begin(), row.end());
  basis_pos_.clear();
  for (size_t di = 0; di < basis_.size(); ++di)
    for (size_t j = 0; j < basis_[di].size(); ++j)
      basis_pos_[basis_[di][j]] = {static_cast<int>(di), static_cast<int>(j)};
}

std::vector<std::vector<Rational>> Ring::normalize(const MonomialCombo& combo,
                                                   long* fuel) const {
  std::vector<std::vector<Rational>> out(basis_.size());
  for (size_t di = 0; di < basis_.size(); ++di)
    out[di].assign(basis_[di].size(), Rational(0));
  std::vector<std::pair<Rational, Monomial>> work(combo.begin(), combo.end());
  while (!work.empty()) {
    auto [c, m] = work.back();
    work.pop_back();
    if (c.is_zero()) continue;
    if (degree_of(m) > pres_.top_degree) continue;  // structural truncation
    auto it = basis_pos_.find(m);
    if (it != basis_pos_.end()) {
      out[static_cast<size_t>(it->second.first)][static_cast<size_t>(it->second.second)] += c;
      continue;
    }
    const RewriteRule* hit = nullptr;
    for (const auto& rule : pres_.rules)
      if (divides(rule.lhs, m)) {
        hit = &rule;
        break;
      }
    if (hit == nullptr)
      throw Error(Errc::invalid_presentation,
                  "monomial " + monomial_name(m) + " is neither basic nor reducible");
    if (--(*fuel) < 0)
      throw Error(Errc::non_confluent_rules,
                  "rewriting did not terminate in ring '" + pres_.name + "'");
    Monomial rest = mono_div(m, hit->lhs);
    for (const auto& [rc, rm] : hit->rhs)
      work.emplace_back(c * rc, mono_mul(rm, rest));
  }
  return out;
}

RingPtr Ring::make(RingPresentation p) {
  std::shared_ptr<Ring> r(new Ring());
  r->pres_ = std::move(p);
  r->validate_and_finish();
  return r;
}

void Ring::validate_and_finish() {
  const size_t n = pres_.generators.size();
  std::set<std::string> names;
  for (const auto& g : pres_.generators) {
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw Error(Errc::odd_degree_generator,
                  "generator " + g.symbol + " has degree " + std::to_string(g.degree) +
                      "; generators must have even positive degree");
    if (!names.insert(g.symbol).second)
      throw Error(Errc::invalid_presentation, "duplicate generator " + g.symbol);
  }
  if (pres_.top_degree <= 0 || pres_.top_degree % 2 != 0)
    throw Error(Errc::invalid_presentation, "top degree must be even and positive");

  for (const auto& rule : pres_.rules) {
    if (rule.lhs.size() != n)
      throw Error(Errc::invalid_presentation, "rule lhs has wrong arity");
    if (mono_is_one(rule.lhs))
      throw Error(Errc::invalid_presentation, "rule lhs must not be the unit monomial");
    int ld = degree_of(rule.lhs);
    for (const auto& [c, m] : rule.rhs) {
      (void)c;
      if (m.size() != n)
        throw Error(Errc::invalid_presentation, "rule rhs has wrong arity");
      if (degree_of(m) != ld)
        throw Error(Errc::degree_mismatch,
                    "rule is not degree-homogeneous (lhs degree " + std::to_string(ld) +
                        ", rhs degree " + std::to_string(degree_of(m)) + ")");
    }
  }

  build_basis();
  if (basis_[0].size() != 1 || !mono_is_one(basis_[0][0]))
    throw Error(Errc::invalid_presentation, "degree-0 basis is not {1}");

  // fundamental evaluation must cover the top-degree basis exactly
  const auto& top_basis = basis_.back();
  fundamental_.assign(top_basis.size(), Rational(0));
  std::vector<bool> seen(top_basis.size(), false);
  for (const auto& [m, v] : pres_.fundamental) {
    if (m.size() != n)
      throw Error(Errc::invalid_presentation, "fundamental monomial has wrong arity");
    auto it = basis_pos_.find(m);
    if (it == basis_pos_.end() || it->second.first * 2 != pres_.top_degree)
      throw Error(Errc::invalid_presentation,
                  "fundamental entry " + monomial_name(m) + " is not a top-degree basis monomial");
    fundamental_[static_cast<size_t>(it->second.second)] = v;
    seen[static_cast<size_t>(it->second.second)] = true;
  }
  for (size_t j = 0; j < top_basis.size(); ++j)
    if (!seen[j])
      throw Error(Errc::missing_top_evaluation,
                  "no fundamental evaluation for " + monomial_name(top_basis[j]));

  // confluence: all pairwise basis products normalize, and the two ways of
  // associating any triple product agree
  long fuel = kRewriteFuel;
  std::vector<Monomial> all;
  for (const auto& row : basis_) all.insert(all.end(), row.begin(), row.end());
  auto zero_comps = [&] {
    std::vector<std::vector<Rational>> out(basis_.size());
    for (size_t di = 0; di < basis_.size(); ++di)
      out[di].assign(basis_[di].size(), Rational(0));
    return out;
  };
  for (const auto& a : all)
    for (const auto& b : all) {
      auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
      if (products_.count(key)) continue;
      if (degree_of(a) + degree_of(b) > pres_.top_degree) {
        products_[key] = zero_comps();
        continue;
      }
      fuel = kRewriteFuel;
      products_[key] = normalize({{Rational(1), mono_mul(a, b)}}, &fuel);
    }
  auto combo_times_monomial = [&](const std::vector<std::vector<Rational>>& comps,
                                  const Monomial& m) {
    MonomialCombo combo;
    for (size_t di = 0; di < comps.size(); ++di)
      for (size_t j = 0; j < comps[di].size(); ++j)
        if (!comps[di][j].is_zero())
          combo.emplace_back(comps[di][j], mono_mul(basis_[di][j], m));
    fuel = kRewriteFuel;
    return normalize(combo, &fuel);
  };
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        // rules preserve degree, so a triple product above the truncation
        // degree is zero under either association
        if (degree_of(a) + degree_of(b) + degree_of(c) > pres_.top_degree) continue;
        auto kab = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto kbc = b <= c ? std::make_pair(b, c) : std::make_pair(c, b);
        auto left = combo_times_monomial(products_.at(kab), c);
        auto right = combo_times_monomial(products_.at(kbc), a);
        if (left != right)
          throw Error(Errc::non_confluent_rules,
                      "rules are not confluent: (" + monomial_name(a) + "*" +
                          monomial_name(b) + ")*" + monomial_name(c) +
                          " differs from the other association");
      }

  // lattice generators: default to the basis monomials, otherwise take the
  // declared combinations; each degree needs an invertible square system
  lattice_.assign(basis_.size(), {});
  std::vector<bool> given(basis_.size(), false);
  for (const auto& [deg, combos] : pres_.lattice) {
    if (deg < 0 || deg % 2 != 0 || deg > pres_.top_degree)
      throw Error(Errc::invalid_presentation, "lattice clause for invalid degree");
    size_t di = static_cast<size_t>(deg / 2);
    given[di] = true;
    for (const auto& combo : combos) {
      fuel = kRewriteFuel;
      RingElement e;
      e.ring_ = shared_from_this();
      e.comps_ = normalize(combo, &fuel);
      if (!e.is_homogeneous(deg))
        throw Error(Errc::invalid_presentation, "lattice generator is not homogeneous");
      lattice_[di].push_back(std::move(e));
    }
  }
  for (size_t di = 0; di < basis_.size(); ++di) {
    if (!given[di]) {
      for (size_t j = 0; j < basis_[di].size(); ++j) {
        RingElement e;
        e.ring_ = shared_from_this();
        e.comps_.assign(basis_.size(), {});
        for (size_t k = 0; k < basis_.size(); ++k)
          e.comps_[k].assign(basis_[k].size(), Rational(0));
        e.comps_[di][j] = Rational(1);
        lattice_[di].push_back(std::move(e));
      }
    }
    if (lattice_[di].size() != basis_[di].size())
      throw Error(Errc::invalid_presentation,
                  "degree " + std::to_string(2 * di) + " has " +
                      std::to_string(lattice_[di].size()) + " lattice generators for a rank-" +
                      std::to_string(basis_[di].size()) + " group");
    // independence
    std::vector<std::vector<Rational>> cols;
    for (const auto& g : lattice_[di]) cols.push_back(g.comps_[di]);
    std::vector<Rational> zero(basis_[di].size(), Rational(0));
    for (size_t j = 0; j < basis_[di].size(); ++j) {
      std::vector<Rational> unit = zero;
      unit[j] = Rational(1);
      if (!solve_columns(cols, unit))
        throw Error(Errc::invalid_presentation,
                    "lattice generators of degree " + std::to_string(2 * di) +
                        " do not span");
    }
  }
}

int Ring::dim(int degree) const {
  if (degree < 0 || degree % 2 != 0 || degree > pres_.top_degree) return 0;
  return static_cast<int>(basis_[static_cast<size_t>(degree / 2)].size());
}

const std::vector<Monomial>& Ring::basis(int degree) const {
  return basis_.at(static_cast<size_t>(degree / 2));
}

std::string Ring::monomial_name(const Monomial& m) const {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += pres_.generators[i].symbol;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingElement Ring::zero() const {
  RingElement e;
  e.ring_ = shared_from_this();
  e.comps_.resize(basis_.size());
  for (size_t di = 0; di < basis_.size(); ++di)
    e.comps_[di].assign(basis_[di].size(), Rational(0));
  return e;
}

RingElement Ring::one() const { return scalar(Rational(1)); }

RingElement Ring::scalar(const Rational& c) const {
  RingElement e = zero();
  e.comps_[0][0] = c;
  return e;
}

RingElement Ring::generator(const std::string& symbol) const {
  for (size_t i = 0; i < pres_.generators.size(); ++i) {
    if (pres_.generators[i].symbol == symbol) {
      Monomial m(pres_.generators.size(), 0);
      m[i] = 1;
      return monomial_element(m);
    }
  }
  throw Error(Errc::unknown_symbol, "unknown generator " + symbol);
}

RingElement Ring::monomial_element(const Monomial& m, const Rational& c) const {
  return element({{c, m}});
}

RingElement Ring::element(const MonomialCombo& combo) const {
  long fuel = kRewriteFuel;
  RingElement e;
  e.ring_ = shared_from_this();
  e.comps_ = normalize(combo, &fuel);
  return e;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const Ring& ring = *a.ring();
  RingElement out = ring.zero();
  const auto& ac = a.components();
  const auto& bc = b.components();
  for (size_t di = 0; di < ac.size(); ++di)
    for (size_t i = 0; i < ac[di].size(); ++i) {
      if (ac[di][i].is_zero()) continue;
      for (size_t dj = 0; dj < bc.size(); ++dj) {
        if (static_cast<int>(di + dj) * 2 > ring.top_degree()) break;
        for (size_t j = 0; j < bc[dj].size(); ++j) {
          if (bc[dj][j].is_zero()) continue;
          Rational c = ac[di][i] * bc[dj][j];
          const Monomial& ma = ring.basis(static_cast<int>(di) * 2)[i];
          const Monomial& mb = ring.basis(static_cast<int>(dj) * 2)[j];
          out += c * ring.product_of_basis(ma, mb);
        }
      }
    }
  return out;
}

Rational Ring::evaluate_top(const RingElement& e, int orientation) const {
  if (e.ring().get() != this)
    throw Error(Errc::ring_mismatch, "element of another ring");
  Rational acc(0);
  const auto& top = e.components().back();
  for (size_t j = 0; j < top.size(); ++j) acc += top[j] * fundamental_[j];
  return Rational(orientation) * acc;
}

bool Ring::is_integral(const RingElement& e) const {
  if (e.ring().get() != this)
    throw Error(Errc::ring_mismatch, "element of another ring");
  for (size_t di = 0; di < basis_.size(); ++di) {
    bool zero_part = true;
    for (const auto& c : e.components()[di])
      if (!c.is_zero()) zero_part = false;
    if (zero_part) continue;
    std::vector<std::vector<Rational>> cols;
    for (const auto& g : lattice_[di]) cols.push_back(g.components()[di]);
    auto z = solve_columns(cols, e.components()[di]);
    if (!z) return false;
    for (const auto& c : *z)
      if (!c.is_integer()) return false;
  }
  return true;
}

const std::vector<RingElement>& Ring::lattice_generators(int degree) const {
  return lattice_.at(static_cast<size_t>(degree / 2));
}

RingElement Ring::transport_by_name(const RingElement& src) const {
  if (!src.ring()) throw Error(Errc::ring_mismatch, "transport of a null element");
  const Ring& from = *src.ring();
  // generator index map by name
  std::vector<size_t> to_index;
  for (const auto& g : from.presentation().generators) {
    bool found = false;
    for (size_t j = 0; j < pres_.generators.size(); ++j) {
      if (pres_.generators[j].symbol == g.symbol) {
        if (pres_.generators[j].degree != g.degree)
          throw Error(Errc::degree_mismatch,
                      "generator " + g.symbol + " changes degree under transport");
        to_index.push_back(j);
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(Errc::unknown_symbol, "generator " + g.symbol + " missing in target ring");
  }
  MonomialCombo combo;
  for (size_t di = 0; di < src.components().size(); ++di)
    for (size_t j = 0; j < src.components()[di].size(); ++j) {
      const Rational& c = src.components()[di][j];
      if (c.is_zero()) continue;
      const Monomial& m = from.basis(static_cast<int>(di) * 2)[j];
      Monomial out(pres_.generators.size(), 0);
      for (size_t i = 0; i < m.size(); ++i) out[to_index[i]] += m[i];
      combo.emplace_back(c, out);
    }
  return element(combo);
}

bool Ring::structurally_equal(const Ring& o) const {
  if (pres_.top_degree != o.pres_.top_degree) return false;
  if (pres_.generators.size() != o.pres_.generators.size()) return false;
  for (size_t i = 0; i < pres_.generators.size(); ++i)
    if (pres_.generators[i].symbol != o.pres_.generators[i].symbol ||
        pres_.generators[i].degree != o.pres_.generators[i].degree)
      return false;
  if (basis_ != o.basis_) return false;
  if (fundamental_ != o.fundamental_) return false;
  for (const auto& [key, comps] : products_) {
    auto it = o.products_.find(key);
    if (it == o.products_.end() || it->second != comps) return false;
  }
  for (size_t di = 0; di < lattice_.size(); ++di) {
    if (lattice_[di].size() != o.lattice_[di].size()) return false;
    for (size_t j = 0; j < lattice_[di].size(); ++j)
      if (lattice_[di][j].components() != o.lattice_[di][j].components()) return false;
  }
  return true;
}

RingElement Ring::product_of_basis(const Monomial& a, const Monomial& b) const {
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  RingElement e;
  e.ring_ = shared_from_this();
  e.comps_ = products_.at(key);
  return e;
}

// ---------------------------------------------------------------------------
// projectivization

RingPtr projectivize(const RingPtr& base, int rank,
                     const std::vector<RingElement>& chern_parts,
                     const std::string& fiber_symbol, const std::string& name) {
  if (rank < 1) throw Error(Errc::rank_zero, "projectivization needs rank >= 1");
  if (static_cast<int>(chern_parts.size()) != rank)
    throw Error(Errc::invalid_presentation, "need exactly rank Chern parts c_1..c_rank");
  for (int i = 0; i < rank; ++i) {
    if (chern_parts[static_cast<size_t>(i)].ring().get() != base.get())
      throw Error(Errc::ring_mismatch, "bundle class lives in another ring");
    if (!chern_parts[static_cast<size_t>(i)].is_homogeneous(2 * (i + 1)))
      throw Error(Errc::inhomogeneous_class,
                  "c_" + std::to_string(i + 1) + " is not homogeneous of degree " +
                      std::to_string(2 * (i + 1)));
  }

  const RingPresentation& bp = base->presentation();
  const size_t n = bp.generators.size();
  RingPresentation p;
  p.name = name.empty() ? "P(" + bp.name + ")" : name;
  p.generators = bp.generators;
  p.generators.push_back({fiber_symbol, 2});
  p.top_degree = bp.top_degree + 2 * (rank - 1);

  auto lift = [&](const Monomial& m, unsigned fiber_exp) {
    Monomial out(n + 1, 0);
    for (size_t i = 0; i < n; ++i) out[i] = m[i];
    out[n] = fiber_exp;
    return out;
  };

  for (const auto& rule : bp.rules) {
    RewriteRule lifted;
    lifted.lhs = lift(rule.lhs, 0);
    for (const auto& [c, m] : rule.rhs) lifted.rhs.emplace_back(c, lift(m, 0));
    p.rules.push_back(std::move(lifted));
  }
  // Grothendieck relation: y^rank + sum_i c_i y^{rank-i} = 0
  RewriteRule grothendieck;
  grothendieck.lhs = lift(Monomial(n, 0), static_cast<unsigned>(rank));
  for (int i = 1; i <= rank; ++i) {
    const RingElement& ci = chern_parts[static_cast<size_t>(i - 1)];
    for (size_t di = 0; di < ci.components().size(); ++di)
      for (size_t j = 0; j < ci.components()[di].size(); ++j) {
        const Rational& c = ci.components()[di][j];
        if (c.is_zero()) continue;
        grothendieck.rhs.emplace_back(
            -c, lift(base->basis(static_cast<int>(di) * 2)[j],
                     static_cast<unsigned>(rank - i)));
      }
  }
  p.rules.push_back(std::move(grothendieck));

  for (const auto& b : base->basis(bp.top_degree)) {
    Rational v = base->evaluate_top(base->monomial_element(b), +1);
    p.fundamental.emplace_back(lift(b, static_cast<unsigned>(rank - 1)), v);
  }
  return Ring::make(std::move(p));
}

RingElement pullback(const RingPtr& target, const RingElement& base_element) {
  return target->transport_by_name(base_element);
}

}  // namespace chern
