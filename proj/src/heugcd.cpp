#include "heugcd.hpp"

#include <algorithm>

#include "abelred/poly_algebra.hpp"

namespace abelred::detail {

namespace {

constexpr int kAttempts = 6;

Int next_xi(const Int& xi) { return xi * 73794 / 27011 + 1; }

Int initial_xi(const Int& na, const Int& nb) { return 2 * std::min(na, nb) + 29; }

// Exact division over Q[y] on integer vectors; returns false on remainder.
bool div_exact(const IntPoly& p, const IntPoly& d, IntPoly* q) {
  if (d.empty()) return false;
  if (p.empty()) {
    if (q) q->clear();
    return true;
  }
  if (p.size() < d.size()) return false;
  IntPoly r = p;
  IntPoly quo(p.size() - d.size() + 1);
  const Int& lc = d.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Int& top = r[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    Int f = top / lc;
    quo[k] = f;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= f * d[j];
  }
  for (std::size_t k = 0; k + 1 < d.size(); ++k)
    if (r[k] != 0) return false;
  if (q) *q = trim(std::move(quo));
  return true;
}

}  // namespace

IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Int max_norm(const IntPoly& p) {
  Int m = 0;
  for (const auto& c : p) m = std::max(m, Int(abs(c)));
  return m;
}

Int eval(const IntPoly& p, const Int& at) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPoly xi_adic(Int v, const Int& xi) {
  IntPoly out;
  const Int half = xi / 2;
  while (v != 0) {
    Int d;
    mpz_fdiv_r(d.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (d > half) d -= xi;
    out.push_back(d);
    v = (v - d) / xi;
  }
  return out;
}

bool divides(const IntPoly& d, const IntPoly& p) { return div_exact(p, d, nullptr); }

std::optional<IntPoly> heu_gcd_uni(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = trim(a_in), b = trim(b_in);
  if (a.empty() && b.empty()) return IntPoly{};
  if (a.empty()) return b;
  if (b.empty()) return a;
  Int ca = content(a), cb = content(b);
  Int c = gcd(ca, cb);
  for (auto& v : a) v /= ca;
  for (auto& v : b) v /= cb;
  if (a.size() == 1 || b.size() == 1) return IntPoly{c};
  Int xi = initial_xi(max_norm(a), max_norm(b));
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Int g = gcd(eval(a, xi), eval(b, xi));
    if (g != 0) {
      IntPoly cand = xi_adic(g, xi);
      Int cc = content(cand);
      if (cc != 0) {
        for (auto& v : cand) v /= cc;
        if (cand.back() < 0)
          for (auto& v : cand) v = -v;
        if (divides(cand, a) && divides(cand, b)) {
          for (auto& v : cand) v *= c;
          return cand;
        }
      }
    }
    xi = next_xi(xi);
  }
  return std::nullopt;
}

namespace {

// Integer polynomial in y obtained by x := xi.
IntPoly eval_x(const BiPoly& p, const Int& xi) {
  IntPoly out(static_cast<std::size_t>(p.deg_y() + 1));
  // Terms are y-major ascending, so accumulate per y with Horner in x.
  std::size_t k = 0;
  const auto& t = p.terms();
  while (k < t.size()) {
    int j = t[k].mono.y;
    std::size_t end = k;
    while (end < t.size() && t[end].mono.y == j) ++end;
    Int acc = 0;
    int cur = t[end - 1].mono.x;
    for (std::size_t m = end; m-- > k;) {
      while (cur > t[m].mono.x) {
        acc *= xi;
        --cur;
      }
      acc += t[m].coef.get_num();
    }
    while (cur > 0) {
      acc *= xi;
      --cur;
    }
    out[static_cast<std::size_t>(j)] = acc;
    k = end;
  }
  return trim(std::move(out));
}

Int bi_max_norm(const BiPoly& p) {
  Int m = 0;
  for (const auto& t : p.terms()) m = std::max(m, Int(abs(t.coef.get_num())));
  return m;
}

}  // namespace

std::optional<BiPoly> heu_gcd_bi(const BiPoly& a, const BiPoly& b) {
  Int xi = initial_xi(bi_max_norm(a), bi_max_norm(b));
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    IntPoly ea = eval_x(a, xi), eb = eval_x(b, xi);
    // A degree drop in y means xi hit a root of a leading coefficient.
    if (static_cast<int>(ea.size()) - 1 == a.deg_y() && static_cast<int>(eb.size()) - 1 == b.deg_y()) {
      if (auto g = heu_gcd_uni(ea, eb)) {
        std::vector<BiPoly::Term> terms;
        for (std::size_t j = 0; j < g->size(); ++j) {
          IntPoly digits = xi_adic((*g)[j], xi);
          for (std::size_t i = 0; i < digits.size(); ++i)
            if (digits[i] != 0) terms.push_back({{static_cast<int>(i), static_cast<int>(j)}, Rat(digits[i])});
        }
        BiPoly cand = BiPoly::from_terms(std::move(terms));
        if (!cand.is_zero()) {
          cand = normalize(cand);
          if (exact_div(a, cand) && exact_div(b, cand)) return cand;
        }
      }
    }
    xi = next_xi(xi);
  }
  return std::nullopt;
}

std::pair<IntPoly, Rat> to_int_poly(const UPoly& p) {
  Int den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
  Rat s(1, den);
  s.canonicalize();
  return {trim(std::move(out)), s};
}

UPoly to_upoly(const IntPoly& p) {
  std::vector<Rat> c(p.begin(), p.end());
  return UPoly(std::move(c));
}

}  // namespace abelred::detail
