#include "abelred/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abelred {

bool greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  if (order == MonomialOrder::TdegYX) return a.y > b.y;
  return a.x > b.x;
}

BiPoly::BiPoly(const Rat& constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

BiPoly BiPoly::x() { return monomial({1, 0}); }
BiPoly BiPoly::y() { return monomial({0, 1}); }

BiPoly BiPoly::monomial(Monomial m, const Rat& coef) {
  if (m.x < 0 || m.y < 0) throw std::invalid_argument("negative exponent in monomial");
  if (coef == 0) return {};
  return BiPoly(std::vector<Term>{{m, coef}});
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.mono.x < 0 || t.mono.y < 0) throw std::invalid_argument("negative exponent in monomial");
    if (!out.empty() && out.back().mono == t.mono) out.back().coef += t.coef;
    else out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  return BiPoly(std::move(out));
}

BiPoly BiPoly::from_upoly(const UPoly& p, Var var) {
  std::vector<Term> t;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    t.push_back({var == Var::X ? Monomial{i, 0} : Monomial{0, i}, p.coeff(i)});
  }
  return BiPoly(std::move(t));  // already sorted for either variable
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UPoly>& coeffs) {
  std::vector<Term> t;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (int i = 0; i <= coeffs[j].degree(); ++i)
      if (coeffs[j].coeff(i) != 0) t.push_back({{i, static_cast<int>(j)}, coeffs[j].coeff(i)});
  return BiPoly(std::move(t));
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{0, 0});
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.x);
  return d;
}

int BiPoly::deg_y() const { return terms_.empty() ? -1 : terms_.back().mono.y; }

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Rat BiPoly::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

BiPoly::Term BiPoly::leading_term(MonomialOrder order) const {
  if (terms_.empty()) return {{0, 0}, Rat(0)};
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (greater(t.mono, best->mono, order)) best = &t;
  return *best;
}

UPoly BiPoly::y_coeff(int j) const {
  std::vector<Rat> c;
  for (const auto& t : terms_) {
    if (t.mono.y != j) continue;
    if (c.size() <= static_cast<std::size_t>(t.mono.x)) c.resize(static_cast<std::size_t>(t.mono.x) + 1);
    c[static_cast<std::size_t>(t.mono.x)] = t.coef;
  }
  return UPoly(std::move(c));
}

std::vector<UPoly> BiPoly::y_coeffs() const {
  std::vector<std::vector<Rat>> c(static_cast<std::size_t>(std::max(deg_y() + 1, 0)));
  for (const auto& t : terms_) {
    auto& row = c[static_cast<std::size_t>(t.mono.y)];
    if (row.size() <= static_cast<std::size_t>(t.mono.x)) row.resize(static_cast<std::size_t>(t.mono.x) + 1);
    row[static_cast<std::size_t>(t.mono.x)] = t.coef;
  }
  std::vector<UPoly> out;
  out.reserve(c.size());
  for (auto& row : c) out.emplace_back(std::move(row));
  return out;
}

UPoly BiPoly::as_upoly(Var var) const {
  if (depends_on(var == Var::X ? Var::Y : Var::X))
    throw std::invalid_argument("as_upoly: polynomial depends on the other variable");
  std::vector<Rat> c;
  for (const auto& t : terms_) {
    int e = var == Var::X ? t.mono.x : t.mono.y;
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = t.coef;
  }
  return UPoly(std::move(c));
}

Rat BiPoly::eval(const Rat& x0, const Rat& y0) const {
  Rat acc = 0;
  for (int j = deg_y(); j >= 0; --j) acc = acc * y0 + y_coeff(j).eval(x0);
  return acc;
}

BiPoly BiPoly::subs_x(const Rat& x0) const {
  std::vector<UPoly> c = y_coeffs();
  std::vector<UPoly> out;
  out.reserve(c.size());
  for (const auto& u : c) out.emplace_back(u.eval(x0));
  return from_y_coeffs(out);
}

BiPoly BiPoly::shift_x(const Rat& shift) const {
  std::vector<UPoly> c = y_coeffs();
  for (auto& u : c) u = u.taylor_shift(shift);
  return from_y_coeffs(c);
}

BiPoly BiPoly::derive(Var v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = v == Var::X ? t.mono.x : t.mono.y;
    if (e == 0) continue;
    Monomial m = t.mono;
    (v == Var::X ? m.x : m.y) -= 1;
    out.push_back({m, t.coef * e});
  }
  return BiPoly(std::move(out));  // order preserved for both variables
}

BiPoly BiPoly::scaled(const Rat& s) const {
  if (s == 0) return {};
  BiPoly out = *this;
  for (auto& t : out.terms_) t.coef *= s;
  return out;
}

BiPoly BiPoly::shifted(Monomial m) const {
  BiPoly out = *this;
  for (auto& t : out.terms_) t.mono = t.mono * m;
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

namespace {

std::vector<BiPoly::Term> merge(const std::vector<BiPoly::Term>& a, const std::vector<BiPoly::Term>& b,
                                bool subtract) {
  std::vector<BiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, subtract ? Rat(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rat c = subtract ? Rat(a[i].coef - b[j].coef) : Rat(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Int common_denominator(const std::vector<BiPoly::Term>& t) {
  Int d = 1;
  for (const auto& term : t)
    if (term.coef.get_den() != 1) d = lcm(d, term.coef.get_den());
  return d;
}

}  // namespace

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].mono).scaled(b.terms_[0].coef);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].mono).scaled(a.terms_[0].coef);
  // Accumulate integer numerators on a dense grid; one division at the end.
  const Int da = common_denominator(a.terms_), db = common_denominator(b.terms_);
  std::vector<std::pair<Monomial, Int>> ai, bi;
  ai.reserve(a.terms_.size());
  bi.reserve(b.terms_.size());
  for (const auto& t : a.terms_) ai.emplace_back(t.mono, Int(t.coef.get_num() * (da / t.coef.get_den())));
  for (const auto& t : b.terms_) bi.emplace_back(t.mono, Int(t.coef.get_num() * (db / t.coef.get_den())));
  const int wx = a.deg_x() + b.deg_x() + 1;
  const int wy = a.deg_y() + b.deg_y() + 1;
  std::vector<Int> grid(static_cast<std::size_t>(wx) * static_cast<std::size_t>(wy));
  std::vector<char> used(grid.size(), 0);
  for (const auto& [ma, ca] : ai) {
    for (const auto& [mb, cb] : bi) {
      std::size_t k = static_cast<std::size_t>(ma.y + mb.y) * static_cast<std::size_t>(wx) +
                      static_cast<std::size_t>(ma.x + mb.x);
      mpz_addmul(grid[k].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      used[k] = 1;
    }
  }
  const Int den = da * db;
  std::vector<BiPoly::Term> out;
  for (int j = 0; j < wy; ++j) {
    for (int i = 0; i < wx; ++i) {
      std::size_t k = static_cast<std::size_t>(j) * static_cast<std::size_t>(wx) + static_cast<std::size_t>(i);
      if (!used[k] || grid[k] == 0) continue;
      Rat c(grid[k], den);
      c.canonicalize();
      out.push_back({{i, j}, std::move(c)});
    }
  }
  return BiPoly(std::move(out));
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Term> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(), [](const Term& a, const Term& b) {
    return greater(a.mono, b.mono, MonomialOrder::TdegYX);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : sorted) {
    if (!first) os << (t.coef < 0 ? " - " : " + ");
    else if (t.coef < 0) os << "-";
    first = false;
    Rat a = abs(t.coef);
    bool has_var = t.mono.x > 0 || t.mono.y > 0;
    if (!has_var) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    bool need_star = false;
    if (t.mono.x > 0) {
      os << "x";
      if (t.mono.x > 1) os << "^" << t.mono.x;
      need_star = true;
    }
    if (t.mono.y > 0) {
      if (need_star) os << "*";
      os << "y";
      if (t.mono.y > 1) os << "^" << t.mono.y;
    }
  }
  return os.str();
}

BiPoly arith(const BiPoly& a, const BiPoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
  }
  return {};
}

}  // namespace abelred

namespace abelred {
std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }
}  // namespace abelred
