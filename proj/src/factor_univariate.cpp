// Univariate factorization over Q: square-free split, then Zassenhaus
// (factor mod p, Hensel lift, recombine by trial division).

#include <algorithm>
#include <stdexcept>

#include "abelred/factor.hpp"
#include "heugcd.hpp"
#include "modp.hpp"

namespace abelred {

namespace {

using detail::IntPoly;
using detail::ModP;
using detail::PolyP;
using detail::degree;

std::vector<unsigned> small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    const unsigned limit = 20000;
    std::vector<bool> sieve(limit, true);
    for (unsigned i = 2; i < limit; ++i) {
      if (!sieve[i]) continue;
      if (i > 2) out.push_back(i);
      for (unsigned j = i * i; j < limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

PolyP to_modp(const IntPoly& f, const ModP& F) {
  PolyP out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = F.reduce(f[i]);
  return F.trim(std::move(out));
}

IntPoly from_modp(const PolyP& f) {
  IntPoly out;
  out.reserve(f.size());
  for (auto v : f) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return detail::trim(std::move(c));
}

IntPoly mod_nonneg(IntPoly a, const Int& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return detail::trim(std::move(a));
}

IntPoly mod_symmetric(IntPoly a, const Int& m) {
  const Int half = m / 2;
  for (auto& v : a) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return detail::trim(std::move(a));
}

// Lift f = g*h (mod p) to (mod p^k); f monic modulo p^k, g and h monic.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& f, const PolyP& g, const PolyP& h, const ModP& F, int k) {
  PolyP s, t;
  F.ext_gcd(g, h, &s, &t);
  IntPoly G = from_modp(g), H = from_modp(h);
  Int mod = static_cast<unsigned long>(F.p());
  for (int step = 1; step < k; ++step) {
    IntPoly gh = mul(G, H);
    IntPoly e(std::max(f.size(), gh.size()));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] = f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& v : e) v /= mod;  // exact
    PolyP eb = to_modp(e, F);
    if (!eb.empty()) {
      PolyP dg = F.rem(F.mul(t, eb), g);
      PolyP dh = F.quo(F.sub(eb, F.mul(h, dg)), g);
      IntPoly dG = from_modp(dg), dH = from_modp(dh);
      if (G.size() < dG.size()) G.resize(dG.size());
      if (H.size() < dH.size()) H.resize(dH.size());
      for (std::size_t i = 0; i < dG.size(); ++i) G[i] += mod * dG[i];
      for (std::size_t i = 0; i < dH.size(); ++i) H[i] += mod * dH[i];
    }
    mod *= F.p();
  }
  return {G, H};
}

void lift_all(const IntPoly& f, const std::vector<PolyP>& factors, const ModP& F, int k, const Int& pk,
              std::vector<IntPoly>* out) {
  if (factors.size() == 1) {
    out->push_back(mod_nonneg(f, pk));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<PolyP> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<PolyP> right(factors.begin() + static_cast<long>(half), factors.end());
  PolyP g{1}, h{1};
  for (const auto& q : left) g = F.mul(g, q);
  for (const auto& q : right) h = F.mul(h, q);
  auto [G, H] = lift_pair(f, g, h, F, k);
  lift_all(mod_nonneg(G, pk), left, F, k, pk, out);
  lift_all(mod_nonneg(H, pk), right, F, k, pk, out);
}

bool divide_exact_int(const IntPoly& p, const IntPoly& d, IntPoly* q) {
  if (p.size() < d.size()) return false;
  IntPoly r = p;
  IntPoly quo(p.size() - d.size() + 1);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Int& top = r[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return false;
    Int f = top / d.back();
    quo[k] = f;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= f * d[j];
  }
  for (std::size_t j = 0; j + 1 < d.size(); ++j)
    if (r[j] != 0) return false;
  *q = detail::trim(std::move(quo));
  return true;
}

IntPoly primitive_int(IntPoly p) {
  Int c = detail::content(p);
  if (c != 0)
    for (auto& v : p) v /= c;
  if (!p.empty() && p.back() < 0)
    for (auto& v : p) v = -v;
  return p;
}

// Next combination of size s from n, lexicographic. Returns false at end.
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

// f primitive, square-free, degree >= 1.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d <= 1) return {f};
  std::mt19937_64 rng(0x5eed);
  std::vector<PolyP> best;
  unsigned best_p = 0;
  int good = 0;
  for (unsigned p : small_primes()) {
    ModP F(p);
    if (F.reduce(f.back()) == 0) continue;
    PolyP fp = to_modp(f, F);
    if (degree(F.gcd(fp, F.derivative(fp))) > 0) continue;
    auto facs = F.factor_squarefree(fp, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1 || ++good >= 5) break;
  }
  if (best_p == 0) throw std::runtime_error("zassenhaus: no suitable prime");
  if (best.size() == 1) return {f};
  const ModP F(best_p);

  // Mignotte-style coefficient bound for any factor, times the leading
  // coefficient that recombination multiplies in.
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int bound = root * abs(f.back()) * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(d));
  int k = 1;
  Int pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }

  Int lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
  IntPoly fhat = f;
  for (auto& c : fhat) c *= lc_inv;
  fhat = mod_nonneg(std::move(fhat), pk);
  std::vector<PolyP> monic_facs;
  for (const auto& q : best) monic_facs.push_back(F.monic(q));
  std::vector<IntPoly> lifted;
  lift_all(fhat, monic_facs, F, k, pk, &lifted);

  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    do {
      IntPoly cand{rest.back()};
      for (auto i : comb) cand = mod_nonneg(mul(cand, lifted[alive[i]]), pk);
      cand = primitive_int(mod_symmetric(std::move(cand), pk));
      IntPoly q;
      if (divide_exact_int(rest, cand, &q)) {
        result.push_back(cand);
        rest = q;
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
  if (rest.size() > 1) result.push_back(primitive_int(rest));
  return result;
}

std::vector<std::pair<UPoly, int>> yun(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly a = f.monic();
  UPoly c = gcd(a, a.derivative());
  UPoly w = a / c;
  UPoly y = a.derivative() / c;
  UPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

}  // namespace

UFactorization factor_univariate(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
  UFactorization out;
  for (const auto& [part, mult] : yun(p)) {
    IntPoly ip = primitive_int(detail::to_int_poly(part).first);
    for (auto& fac : zassenhaus(ip)) out.factors.emplace_back(detail::to_upoly(fac), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i)
      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    return a.second < b.second;
  });
  Rat lc = p.leading();
  for (const auto& [fac, mult] : out.factors) {
    Rat l = fac.leading();
    for (int i = 0; i < mult; ++i) lc /= l;
  }
  out.content = lc;
  return out;
}

RationalRoots roots_rational(const UPoly& u) {
  if (u.is_constant()) throw std::invalid_argument("roots_rational: constant polynomial");
  RationalRoots out;
  for (const auto& [fac, mult] : factor_univariate(u).factors) {
    if (fac.degree() == 1) out.roots.emplace_back(-fac.coeff(0) / fac.coeff(1), mult);
    else out.other_factors.emplace_back(fac, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RationalRoots roots_rational(const BiPoly& u) { return roots_rational(u.as_upoly(Var::X)); }

}  // namespace abelred
