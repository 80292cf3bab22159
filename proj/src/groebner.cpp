// Buchberger's algorithm in lex order with a reduction cap, and a small
// solver that back-substitutes rational roots of elimination polynomials.

#include "abelred/groebner.hpp"

#include <algorithm>
#include <set>

#include "abelred/factor.hpp"

namespace abelred {

namespace {

bool exp_divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

int exp_degree(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// Full reduction of f by g, not normalized; false when the step budget
// runs out.
bool remainder(MPoly f, const std::vector<MPoly>& g, MPoly* out, long* steps) {
  MPoly rem(f.nvars());
  while (!f.is_zero()) {
    if (--*steps < 0) return false;
    const Exponent lt = f.leading_exp();
    const Rat lc = f.leading_coeff();
    bool divided = false;
    for (const auto& d : g) {
      if (!exp_divides(d.leading_exp(), lt)) continue;
      f -= d.mul_term(exp_sub(lt, d.leading_exp()), lc / d.leading_coeff());
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(lt, lc);
      f.add_term(lt, -lc);
    }
  }
  *out = std::move(rem);
  return true;
}

}  // namespace

std::optional<std::vector<MPoly>> groebner_lex(std::vector<MPoly> gens, const GroebnerLimits& limits,
                                               int* reductions_used) {
  long steps = 200000L * limits.max_reductions / 2000 + 1000;
  int reductions = 0;
  std::vector<MPoly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  while (!pairs.empty()) {
    auto best = pairs.begin();
    int best_deg = -1;
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      int d = exp_degree(exp_lcm(g[it->first].leading_exp(), g[it->second].leading_exp()));
      if (best_deg < 0 || d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);
    const Exponent& li = g[i].leading_exp();
    const Exponent& lj = g[j].leading_exp();
    const Exponent l = exp_lcm(li, lj);
    if (exp_degree(l) == exp_degree(li) + exp_degree(lj)) continue;  // coprime leading terms
    if (++reductions > limits.max_reductions) return std::nullopt;
    MPoly s = g[i].mul_term(exp_sub(l, li), 1) - g[j].mul_term(exp_sub(l, lj), 1);
    MPoly r;
    if (!remainder(std::move(s), g, &r, &steps)) return std::nullopt;
    r = r.monic();
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      if (reductions_used) *reductions_used = reductions;
      return std::vector<MPoly>{MPoly(r.nvars(), 1)};
    }
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }
  // Minimal, then reduced basis.
  std::vector<MPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b || !exp_divides(g[b].leading_exp(), g[a].leading_exp())) continue;
      redundant = g[b].leading_exp() != g[a].leading_exp() || b < a;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<MPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    MPoly lead(minimal[a].nvars());
    lead.add_term(minimal[a].leading_exp(), 1);
    MPoly tail = minimal[a] - lead;
    MPoly rem;
    if (!remainder(tail, others, &rem, &steps)) return std::nullopt;
    reduced.push_back(lead + rem);
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MPoly& a, const MPoly& b) { return LexGreater()(b.leading_exp(), a.leading_exp()); });
  if (reductions_used) *reductions_used = reductions;
  return reduced;
}

namespace {

struct SolveState {
  const GroebnerLimits* limits;
  PolySystemResult* out;
  std::set<std::vector<Rat>> found;
  int branches = 0;
};

void solve_rec(std::vector<MPoly> eqs, std::vector<Rat> point, std::vector<bool> assigned, SolveState& st) {
  if (++st.branches > 256) {
    st.out->inconclusive = true;
    return;
  }
  auto gb = groebner_lex(std::move(eqs), *st.limits);
  if (!gb) {
    st.out->inconclusive = true;
    return;
  }
  if (gb->size() == 1 && (*gb)[0].is_constant() && !(*gb)[0].is_zero()) return;
  const std::size_t nv = point.size();
  // Smallest variable (largest index) still present.
  std::size_t v = nv;
  for (const auto& g : *gb)
    for (auto u : g.variables())
      if (v == nv || u > v) v = u;
  if (v == nv) {
    // No equations left: unassigned variables are free.
    bool any_free = false;
    for (std::size_t u = 0; u < nv; ++u)
      if (!assigned[u]) any_free = true;
    if (!any_free) {
      st.found.insert(point);
      return;
    }
    st.out->sampled = true;
    for (int sample : {0, 1}) {
      std::vector<Rat> p = point;
      for (std::size_t u = 0; u < nv; ++u)
        if (!assigned[u]) p[u] = sample;
      st.found.insert(p);
    }
    return;
  }
  // Unassigned variables below v never occur: they are free.
  std::vector<Rat> values;
  bool free_v = true;
  for (const auto& g : *gb) {
    auto vars = g.variables();
    if (vars.size() == 1 && vars[0] == v) {
      auto roots = roots_rational(g.as_univariate(v));
      if (!roots.other_factors.empty()) st.out->nonrational = true;
      for (const auto& [r, m] : roots.roots) values.push_back(r);
      free_v = false;
      break;
    }
  }
  if (free_v) {
    st.out->sampled = true;
    values = {Rat(0), Rat(1)};
    // Special values where a leading coefficient in the other variables
    // vanishes can carry components of their own.
    for (const auto& g : *gb) {
      MPoly lc(g.nvars());
      Exponent lead = g.leading_exp();
      for (const auto& [e, c] : g.terms()) {
        bool same = true;
        for (std::size_t u = 0; u < nv; ++u)
          if (u != v && e[u] != lead[u]) same = false;
        if (!same) continue;
        Exponent ev(nv, 0);
        ev[v] = e[v];
        lc.add_term(ev, c);
      }
      if (lc.degree_in(v) > 0)
        for (const auto& [r, m] : roots_rational(lc.as_univariate(v)).roots) values.push_back(r);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  for (const auto& r : values) {
    std::vector<MPoly> sub;
    for (const auto& g : *gb) sub.push_back(g.subs(v, r));
    std::vector<Rat> p = point;
    p[v] = r;
    std::vector<bool> a = assigned;
    a[v] = true;
    // Variables not occurring in any equation after this point are free
    // and handled at the leaf.
    solve_rec(std::move(sub), std::move(p), std::move(a), st);
  }
}

}  // namespace

PolySystemResult solve_poly_system_small(const std::vector<MPoly>& eqs, const GroebnerLimits& limits) {
  PolySystemResult out;
  if (eqs.empty()) return out;
  const std::size_t nv = eqs.front().nvars();
  std::set<std::size_t> used;
  for (const auto& e : eqs)
    for (auto v : e.variables()) used.insert(v);
  if (used.size() > limits.max_unknowns) {
    out.inconclusive = true;
    return out;
  }
  SolveState st{&limits, &out, {}, 0};
  solve_rec(eqs, std::vector<Rat>(nv), std::vector<bool>(nv, false), st);
  for (const auto& p : st.found) {
    bool ok = true;
    for (const auto& e : eqs)
      if (e.eval(p) != 0) ok = false;
    if (ok) out.solutions.push_back(p);
  }
  return out;
}

}  // namespace abelred
