#include "abelred/poly_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "heugcd.hpp"

namespace abelred {

std::pair<BiPoly, Rat> normalize_with_scale(const BiPoly& p) {
  if (p.is_zero()) return {BiPoly(), Rat(1)};
  Int num = 0, den = 1;
  for (const auto& t : p.terms()) {
    num = gcd(num, t.coef.get_num());
    den = lcm(den, t.coef.get_den());
  }
  Rat s(den, num);
  s.canonicalize();
  if (p.leading_coeff() < 0) s = -s;
  return {p.scaled(s), s};
}

BiPoly normalize(const BiPoly& p) { return normalize_with_scale(p).first; }

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div by zero polynomial");
  if (a.is_zero()) return BiPoly();
  if (a.deg_y() < b.deg_y() || a.deg_x() < b.deg_x()) return std::nullopt;
  if (b.is_constant()) return a.scaled(1 / b.constant_term());
  std::vector<UPoly> rem = a.y_coeffs();
  const std::vector<UPoly> bc = b.y_coeffs();
  const int db = b.deg_y();
  const UPoly& lcb = bc.back();
  std::vector<UPoly> q(static_cast<std::size_t>(a.deg_y() - db + 1));
  for (int k = a.deg_y() - db; k >= 0; --k) {
    const UPoly& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    if (top.degree() < lcb.degree()) return std::nullopt;
    auto [qk, r] = divmod(top, lcb);
    if (!r.is_zero()) return std::nullopt;
    for (int j = 0; j <= db; ++j)
      if (!bc[static_cast<std::size_t>(j)].is_zero())
        rem[static_cast<std::size_t>(k + j)] -= qk * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = std::move(qk);
  }
  for (int j = 0; j < db; ++j)
    if (!rem[static_cast<std::size_t>(j)].is_zero()) return std::nullopt;
  return BiPoly::from_y_coeffs(q);
}

UPoly content_y(const BiPoly& p) {
  UPoly g;
  for (const auto& c : p.y_coeffs()) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

BiPoly primitive_y(const BiPoly& p) {
  if (p.is_zero()) return {};
  UPoly c = content_y(p);
  if (c.is_constant()) return normalize(p);
  return normalize(*exact_div(p, BiPoly::from_upoly(c, Var::X)));
}

namespace {

// Pseudo-remainder in y with coefficients in Q[x].
std::vector<UPoly> prem(std::vector<UPoly> a, const std::vector<UPoly>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    UPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(da - db + j)] -= la * b[static_cast<std::size_t>(j)];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

std::vector<UPoly> primitive_part(std::vector<UPoly> a) {
  UPoly g;
  for (const auto& c : a)
    if (!c.is_zero()) g = gcd(g, c);
  if (!g.is_constant())
    for (auto& c : a) c = c / g;
  // Also strip the rational content to keep numbers small.
  Int num = 0, den = 1;
  for (const auto& c : a)
    for (const auto& r : c.coeffs()) {
      num = gcd(num, r.get_num());
      den = lcm(den, r.get_den());
    }
  if (num != 0) {
    Rat s(den, num);
    s.canonicalize();
    for (auto& c : a) c = c.scaled(s);
  }
  return a;
}

}  // namespace

BiPoly gcd_prs(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  UPoly cont = gcd(content_y(a), content_y(b));
  BiPoly result = BiPoly::from_upoly(cont, Var::X);
  if (a.deg_y() > 0 && b.deg_y() > 0) {
    std::vector<UPoly> r0 = primitive_part(a.y_coeffs()), r1 = primitive_part(b.y_coeffs());
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (true) {
      std::vector<UPoly> r = prem(r0, r1);
      if (r.empty()) break;
      if (r.size() == 1) {
        r1 = {UPoly(1)};
        break;
      }
      r0 = std::move(r1);
      r1 = primitive_part(std::move(r));
    }
    result = result * BiPoly::from_y_coeffs(primitive_part(std::move(r1)));
  }
  return normalize(result);
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  BiPoly na = normalize(a), nb = normalize(b);
  if (na.is_constant() || nb.is_constant()) return BiPoly(1);
  if (na == nb) return na;
  if (!na.depends_on(Var::Y) && !nb.depends_on(Var::Y))
    return normalize(BiPoly::from_upoly(gcd(na.as_upoly(Var::X), nb.as_upoly(Var::X)), Var::X));
  if (!na.depends_on(Var::X) && !nb.depends_on(Var::X))
    return normalize(BiPoly::from_upoly(gcd(na.as_upoly(Var::Y), nb.as_upoly(Var::Y)), Var::Y));
  if (auto h = detail::heu_gcd_bi(na, nb)) return *h;
  return gcd_prs(na, nb);
}

DivisionResult reduce_modulo(const BiPoly& f, const std::vector<BiPoly>& divisors, MonomialOrder order) {
  auto cmp = [order](const Monomial& a, const Monomial& b) { return greater(a, b, order); };
  using Work = std::map<Monomial, Rat, decltype(cmp)>;
  std::vector<BiPoly::Term> leads;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::domain_error("reduce_modulo: zero divisor");
    leads.push_back(d.leading_term(order));
  }
  Work p(cmp);
  for (const auto& t : f.terms()) p.emplace(t.mono, t.coef);
  std::vector<std::vector<BiPoly::Term>> q(divisors.size());
  std::vector<BiPoly::Term> r;
  while (!p.empty()) {
    auto lt = p.begin();
    const Monomial m = lt->first;
    const Rat c = lt->second;
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].mono.divides(m)) continue;
      const Monomial qm = m / leads[i].mono;
      const Rat qc = c / leads[i].coef;
      q[i].push_back({qm, qc});
      for (const auto& t : divisors[i].terms()) {
        Monomial tm = t.mono * qm;
        auto [it, inserted] = p.try_emplace(tm, 0);
        it->second -= qc * t.coef;
        if (it->second == 0) p.erase(it);
      }
      divided = true;
      break;
    }
    if (!divided) {
      r.push_back({m, c});
      p.erase(p.begin());
    }
  }
  DivisionResult out;
  for (auto& qi : q) out.quotients.push_back(BiPoly::from_terms(std::move(qi)));
  out.remainder = BiPoly::from_terms(std::move(r));
  return out;
}

BiPoly eval_at_x(const BiPoly& p, const UPoly& modulus) {
  if (modulus.is_constant()) throw std::invalid_argument("eval_at_x: constant modulus");
  std::vector<UPoly> c = p.y_coeffs();
  for (auto& u : c) u = u % modulus;
  return BiPoly::from_y_coeffs(c);
}

bool divides_mod(const BiPoly& b, const BiPoly& a, const UPoly& modulus) {
  std::vector<UPoly> bc = eval_at_x(b, modulus).y_coeffs();
  std::vector<UPoly> rem = eval_at_x(a, modulus).y_coeffs();
  while (!bc.empty() && bc.back().is_zero()) bc.pop_back();
  if (bc.empty()) return rem.empty();
  const int db = static_cast<int>(bc.size()) - 1;
  const UPoly inv = inverse_mod(bc.back(), modulus);
  while (static_cast<int>(rem.size()) - 1 >= db) {
    const int dr = static_cast<int>(rem.size()) - 1;
    UPoly f = (rem.back() * inv) % modulus;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(dr - db + j)];
      slot = (slot - f * bc[static_cast<std::size_t>(j)]) % modulus;
    }
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  return rem.empty();
}

}  // namespace abelred
