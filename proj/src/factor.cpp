// Bivariate square-free decomposition and irreducible factorization.
// Irreducible splitting evaluates at a lucky x = x0, factors the image,
// lifts the factors (x - x0)-adically and recombines by trial division.

#include "abelred/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abelred/poly_algebra.hpp"

namespace abelred {

namespace {

using Series = std::vector<UPoly>;  // index k: coefficient of z^k, a polynomial in y

BiPoly series_to_bipoly(const Series& s) {
  std::vector<BiPoly::Term> terms;
  for (std::size_t k = 0; k < s.size(); ++k)
    for (int j = 0; j <= s[k].degree(); ++j)
      if (s[k].coeff(j) != 0) terms.push_back({{static_cast<int>(k), j}, s[k].coeff(j)});
  return BiPoly::from_terms(std::move(terms));
}

Series bipoly_to_series(const BiPoly& p) {
  Series out(static_cast<std::size_t>(std::max(p.deg_x(), 0) + 1));
  std::vector<std::vector<Rat>> dense(out.size());
  for (const auto& t : p.terms()) {
    auto& row = dense[static_cast<std::size_t>(t.mono.x)];
    if (row.size() <= static_cast<std::size_t>(t.mono.y)) row.resize(static_cast<std::size_t>(t.mono.y) + 1);
    row[static_cast<std::size_t>(t.mono.y)] = t.coef;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = UPoly(std::move(dense[k]));
  return out;
}

Series mul_trunc(const Series& a, const Series& b, std::size_t prec) {
  Series c(std::min(prec, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < c.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series scale_series(const Series& a, const UPoly& s, std::size_t prec) {
  // s is a polynomial in z with rational coefficients.
  Series c(prec);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i)
    for (int k = 0; k <= s.degree() && i + static_cast<std::size_t>(k) < prec; ++k)
      if (s.coeff(k) != 0) c[i + static_cast<std::size_t>(k)] += a[i].scaled(s.coeff(k));
  return c;
}

// Coefficient of y^{top} across z-powers: the leading coefficient in y as a
// polynomial in z.
UPoly lc_in_z(const Series& f, int top) {
  std::vector<Rat> c(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) c[k] = f[k].coeff(top);
  return UPoly(std::move(c));
}

// Lift f = g * h from mod z to mod z^prec; f monic in y, g and h monic.
std::pair<Series, Series> lift_pair(const Series& f, const UPoly& g0, const UPoly& h0, std::size_t prec) {
  const ExtGcd eg = ext_gcd(g0, h0);  // s*g0 + t*h0 = 1
  Series G{g0}, H{h0};
  G.resize(prec);
  H.resize(prec);
  for (std::size_t j = 1; j < prec; ++j) {
    UPoly e = j < f.size() ? f[j] : UPoly();
    for (std::size_t a = 0; a <= j; ++a) {
      const std::size_t b = j - a;  // G[j], H[j] are still zero
      if (!G[a].is_zero() && !H[b].is_zero()) e -= G[a] * H[b];
    }
    if (e.is_zero()) continue;
    UPoly dG = (eg.t * e) % g0;
    UPoly dH = (e - h0 * dG) / g0;
    G[j] = dG;
    H[j] = dH;
  }
  return {G, H};
}

void lift_all(const Series& f, const std::vector<UPoly>& facs, std::size_t prec, std::vector<Series>* out) {
  if (facs.size() == 1) {
    out->push_back(f);
    return;
  }
  const std::size_t half = facs.size() / 2;
  std::vector<UPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<UPoly> right(facs.begin() + static_cast<long>(half), facs.end());
  UPoly g(1), h(1);
  for (const auto& q : left) g *= q;
  for (const auto& q : right) h *= q;
  auto [G, H] = lift_pair(f, g, h, prec);
  lift_all(G, left, prec, out);
  lift_all(H, right, prec, out);
}

bool squarefree_uni(const UPoly& u) { return gcd(u, u.derivative()).degree() == 0; }

Rat lucky_point(const BiPoly& f) {
  const UPoly lc = f.y_coeff(f.deg_y());
  for (int i = 0;; ++i) {
    const Rat x0 = (i % 2 == 1) ? Rat((i + 1) / 2) : Rat(-(i / 2));
    if (lc.eval(x0) == 0) continue;
    if (squarefree_uni(f.subs_x(x0).as_upoly(Var::Y))) return x0;
    if (i > 4000) throw std::runtime_error("factorize: no lucky evaluation point");
  }
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f square-free, primitive in y, deg_y >= 1.
std::vector<BiPoly> split_irreducible(const BiPoly& f) {
  if (f.deg_y() == 1) return {normalize(f)};
  if (f.deg_x() == 0) {
    std::vector<BiPoly> out;
    for (const auto& [u, m] : factor_univariate(f.as_upoly(Var::Y)).factors)
      out.push_back(normalize(BiPoly::from_upoly(u, Var::Y)));
    return out;
  }
  const Rat x0 = lucky_point(f);
  const UPoly image = f.subs_x(x0).as_upoly(Var::Y);
  std::vector<UPoly> img_facs;
  for (const auto& [u, m] : factor_univariate(image).factors) img_facs.push_back(u.monic());
  if (img_facs.size() == 1) return {normalize(f)};

  const std::size_t prec = static_cast<std::size_t>(f.deg_x()) + 1;
  const int dy = f.deg_y();
  const Series F = bipoly_to_series(f.shift_x(x0));
  const Series Fm = scale_series(F, series_inverse(lc_in_z(F, dy), static_cast<int>(prec)), prec);
  std::vector<Series> lifted;
  lift_all(Fm, img_facs, prec, &lifted);

  std::vector<BiPoly> result;
  BiPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    const Series rest_shifted = bipoly_to_series(rest.shift_x(x0));
    const UPoly rest_lc = lc_in_z(rest_shifted, rest.deg_y());
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    do {
      Series cand = scale_series(lifted[alive[comb[0]]], rest_lc, prec);
      for (std::size_t i = 1; i < s; ++i) cand = mul_trunc(cand, lifted[alive[comb[i]]], prec);
      BiPoly c = primitive_y(series_to_bipoly(cand).shift_x(-x0));
      if (c.deg_y() < 1 || c.deg_x() > rest.deg_x()) continue;
      if (auto q = exact_div(rest, c)) {
        result.push_back(c);
        rest = *q;
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < alive.size(); ++i)
          if (std::find(comb.begin(), comb.end(), i) == comb.end()) next.push_back(alive[i]);
        alive = std::move(next);
        found = true;
        break;
      }
    } while (next_combination(comb, alive.size()));
    if (!found) ++s;
  }
  if (rest.deg_y() > 0) result.push_back(normalize(rest));
  return result;
}

// Yun's algorithm in y; a primitive in y with deg_y >= 1.
std::vector<Factor> yun_y(const BiPoly& a) {
  std::vector<Factor> out;
  const BiPoly b = a.derive(Var::Y);
  const BiPoly c = gcd(a, b);
  BiPoly w = *exact_div(a, c);
  BiPoly z = *exact_div(b, c) - w.derive(Var::Y);
  int i = 1;
  while (w.deg_y() > 0) {
    const BiPoly g = gcd(w, z);
    if (g.deg_y() > 0) out.push_back({g, i});
    w = *exact_div(w, g);
    z = *exact_div(z, g) - w.derive(Var::Y);
    ++i;
  }
  return out;
}

std::vector<std::pair<UPoly, int>> yun_x(const UPoly& a) {
  std::vector<std::pair<UPoly, int>> out;
  if (a.degree() <= 0) return out;
  const UPoly c = gcd(a, a.derivative());
  UPoly w = a / c;
  UPoly z = a.derivative() / c - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    const UPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = w / g;
    z = z / g - w.derivative();
    ++i;
  }
  return out;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
  if (a.poly.total_degree() != b.poly.total_degree()) return a.poly.total_degree() < b.poly.total_degree();
  return a.poly.to_string() < b.poly.to_string();
}

}  // namespace

std::vector<Factor> squarefree_decompose(const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
  std::map<int, BiPoly> by_mult;
  auto merge = [&by_mult](const BiPoly& f, int m) {
    auto [it, inserted] = by_mult.try_emplace(m, f);
    if (!inserted) it->second = it->second * f;
  };
  for (const auto& [u, m] : yun_x(content_y(p))) merge(BiPoly::from_upoly(u, Var::X), m);
  if (p.deg_y() > 0)
    for (const auto& f : yun_y(primitive_y(p))) merge(f.poly, f.multiplicity);
  std::vector<Factor> out;
  for (auto it = by_mult.rbegin(); it != by_mult.rend(); ++it) out.push_back({normalize(it->second), it->first});
  return out;
}

FactorSet factorize(const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
  FactorSet out;
  const UPoly cx = content_y(p);
  if (cx.degree() > 0)
    for (const auto& [u, m] : factor_univariate(cx).factors)
      out.units_x.push_back({normalize(BiPoly::from_upoly(u, Var::X)), m});
  if (p.deg_y() > 0)
    for (const auto& part : yun_y(primitive_y(p)))
      for (auto& f : split_irreducible(part.poly)) out.factors_y.push_back({std::move(f), part.multiplicity});
  std::sort(out.units_x.begin(), out.units_x.end(), factor_less);
  std::sort(out.factors_y.begin(), out.factors_y.end(), factor_less);
  Rat c = p.leading_coeff();
  for (const auto* list : {&out.units_x, &out.factors_y})
    for (const auto& f : *list) {
      const Rat l = f.poly.leading_coeff();
      for (int i = 0; i < f.multiplicity; ++i) c /= l;
    }
  out.content = c;
  return out;
}

BiPoly FactorSet::x_part() const {
  BiPoly out(1);
  for (const auto& f : units_x) out = out * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

int FactorSet::max_y_multiplicity() const {
  int m = 0;
  for (const auto& f : factors_y) m = std::max(m, f.multiplicity);
  return m;
}

}  // namespace abelred
