#include "abelred/ode.hpp"

#include <stdexcept>

#include "abelred/poly_algebra.hpp"

namespace abelred {

InputODE make_input_ode(const BiPoly& M, const BiPoly& N) {
  if (N.is_zero()) throw std::invalid_argument("ODE denominator is zero");
  const BiPoly g = gcd(M, N);
  BiPoly m = *exact_div(M, g), n = *exact_div(N, g);
  // One shared scale: n primitive with integer coefficients, m follows.
  Int num = 0, den = 1;
  for (const auto* p : {&m, &n})
    for (const auto& t : p->terms()) {
      num = gcd(num, t.coef.get_num());
      den = lcm(den, t.coef.get_den());
    }
  Rat s(den, num);
  s.canonicalize();
  if (n.leading_coeff() < 0) s = -s;
  return {m.scaled(s), n.scaled(s)};
}

namespace {
std::string wrap(const BiPoly& p) {
  const std::string s = p.to_string();
  return p.size() > 1 ? "(" + s + ")" : s;
}
}  // namespace

std::string ReducedODE::to_string() const {
  std::string lhs = t == BiPoly(1) ? "y'" : wrap(t) + "*y'";
  std::string rhs;
  for (int i = n(); i >= 0; --i) {
    const BiPoly& c = coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
    std::string term;
    if (mono.empty()) term = wrap(c);
    else if (c == BiPoly(1)) term = mono;
    else if (c == BiPoly(-1)) term = "-" + mono;
    else term = wrap(c) + "*" + mono;
    if (rhs.empty()) rhs = term;
    else if (term[0] == '-') rhs += " - " + term.substr(1);
    else rhs += " + " + term;
  }
  return lhs + " = " + (rhs.empty() ? "0" : rhs);
}

bool operator==(const ReducedODE& a, const ReducedODE& b) { return a.t == b.t && a.coeffs == b.coeffs; }

InputODE as_input_ode(const ReducedODE& r) {
  BiPoly num;
  const BiPoly y = BiPoly::y();
  for (int i = r.n(); i >= 0; --i) num = num * y + r.coeffs[static_cast<std::size_t>(i)];
  return make_input_ode(num, r.t);
}

ReducedODE normalize_reduced(const ReducedODE& r) {
  if (r.t.is_zero()) throw std::invalid_argument("reduced ODE with zero t");
  UPoly g = r.t.as_upoly(Var::X);
  for (const auto& c : r.coeffs)
    if (!c.is_zero()) g = gcd(g, c.as_upoly(Var::X));
  const BiPoly gb = BiPoly::from_upoly(g, Var::X);
  ReducedODE out{*exact_div(r.t, gb), {}};
  for (const auto& c : r.coeffs) out.coeffs.push_back(*exact_div(c, gb));
  while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  Int num = 0, den = 1;
  for (const auto* p : {&out.t})
    for (const auto& t : p->terms()) {
      num = gcd(num, t.coef.get_num());
      den = lcm(den, t.coef.get_den());
    }
  for (const auto& c : out.coeffs)
    for (const auto& t : c.terms()) {
      num = gcd(num, t.coef.get_num());
      den = lcm(den, t.coef.get_den());
    }
  Rat s(den, num);
  s.canonicalize();
  if (out.t.leading_coeff() < 0) s = -s;
  out.t = out.t.scaled(s);
  for (auto& c : out.coeffs) c = c.scaled(s);
  return out;
}

ReducedODE reduced_from_rational(const std::vector<RatFunc>& f) {
  UPoly T(1);
  for (const auto& fi : f) T = lcm(T, fi.den());
  ReducedODE r{BiPoly::from_upoly(T, Var::X), {}};
  for (const auto& fi : f) r.coeffs.push_back(BiPoly::from_upoly(fi.num() * (T / fi.den()), Var::X));
  return normalize_reduced(r);
}

namespace {

// Rational k-th root of q, if any; for even k the positive root.
std::optional<Rat> rational_root(const Rat& q, int k) {
  if (k == 1) return q;
  if (q == 0) return Rat(0);
  if (q < 0 && k % 2 == 0) return std::nullopt;
  const bool neg = q < 0;
  Int a = abs(q.get_num()), b = q.get_den(), ra, rb;
  if (!mpz_root(ra.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  if (!mpz_root(rb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  Rat r = make_rat(ra, rb);
  return neg ? -r : r;
}

}  // namespace

std::optional<Rat> gauge_between(const ReducedODE& from, const ReducedODE& to) {
  if (from.n() != to.n() || from.n() < 1) return std::nullopt;
  const int n = from.n();
  // Leading ratio from.coeffs[n]*to.t / (to.coeffs[n]*from.t) is lambda^(n-1).
  const BiPoly lhs = from.coeffs[n] * to.t, rhs = to.coeffs[n] * from.t;
  if (lhs.is_zero() || rhs.is_zero()) return std::nullopt;
  const Rat q = lhs.leading_coeff() / rhs.leading_coeff();
  if (lhs != rhs.scaled(q)) return std::nullopt;
  std::vector<Rat> cands;
  if (n == 1) {
    if (q != 1) return std::nullopt;
    cands.push_back(1);
  } else if (auto r = rational_root(q, n - 1)) {
    cands.push_back(*r);
    if ((n - 1) % 2 == 0) cands.push_back(-*r);
  }
  for (const Rat& lam : cands) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i) {
      Rat p = 1;
      if (i >= 1)
        for (int e = 0; e < i - 1; ++e) p *= lam;
      else
        p = 1 / lam;
      ok = from.coeffs[i] * to.t == (to.coeffs[i] * from.t).scaled(p);
    }
    if (ok) return lam;
  }
  return std::nullopt;
}

}  // namespace abelred
