#include "abelred/iif.hpp"

#include <algorithm>
#include <map>

#include "abelred/factor.hpp"
#include "abelred/groebner.hpp"
#include "abelred/mpoly.hpp"
#include "abelred/poly_algebra.hpp"

namespace abelred {

namespace {

std::vector<Monomial> simplex(int deg) {
  std::vector<Monomial> out;
  for (int d = deg; d >= 0; --d)
    for (int j = d; j >= 0; --j) out.push_back({d - j, j});
  return out;
}

BiPoly combine(const std::vector<Rat>& v, std::size_t offset, const std::vector<Monomial>& monos) {
  std::vector<BiPoly::Term> terms;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (v[offset + i] != 0) terms.push_back({monos[i], v[offset + i]});
  return BiPoly::from_terms(std::move(terms));
}

BiPoly divergence(const BiPoly& M, const BiPoly& N) { return M.derive(Var::Y) + N.derive(Var::X); }

std::string wrap(const BiPoly& p) { return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string(); }

}  // namespace

UPoly IIFResult::exponent() const {
  const UPoly g = exp_part.is_zero() ? UPoly() : exp_part.as_upoly(Var::X);
  std::vector<Rat> c(static_cast<std::size_t>(g.degree() + 2));
  for (int i = 0; i <= g.degree(); ++i) c[static_cast<std::size_t>(i + 1)] = g.coeff(i) / (i + 1);
  return UPoly(std::move(c));
}

std::string IIFResult::to_string() const {
  std::string out;
  for (const auto& [p, a] : darboux) {
    if (!out.empty()) out += "*";
    out += wrap(p);
    if (a != 1) out += "^" + std::to_string(a);
  }
  if (!exp_part.is_zero()) {
    if (!out.empty()) out += "*";
    out += "exp(" + exponent().to_string() + ")";
  }
  return out.empty() ? "1" : out;
}

LinSystem assemble_fundamental(const BiPoly& M, const BiPoly& N, int degM1, int degN1, int degTau) {
  const auto m1 = simplex(degM1), n1 = simplex(degN1), tau = simplex(degTau);
  LinSystem sys;
  for (const auto& m : m1) sys.add_unknown("m1_" + std::to_string(m.x) + "_" + std::to_string(m.y));
  for (const auto& m : n1) sys.add_unknown("n1_" + std::to_string(m.x) + "_" + std::to_string(m.y));
  for (const auto& m : tau) sys.add_unknown("tau_" + std::to_string(m.x) + "_" + std::to_string(m.y));
  const BiPoly T0 = divergence(M, N);
  std::map<Monomial, LinSystem::Row> rows;
  auto column = [&rows](std::size_t col, const BiPoly& p, const Monomial& shift, const Rat& s) {
    for (const auto& t : p.terms()) rows[t.mono * shift].emplace_back(col, t.coef * s);
  };
  std::size_t col = 0;
  for (const auto& m : m1) column(col++, N, m, Rat(-1));
  for (const auto& m : n1) column(col++, M, m, Rat(1));
  for (const auto& m : tau) column(col++, T0, m, Rat(-1));
  for (auto& [mono, row] : rows) sys.add_row(std::move(row));
  return sys;
}

bool auxiliary_iif_holds(const AuxiliarySystem& a) {
  return a.M1 * a.tau.derive(Var::Y) + a.N1 * a.tau.derive(Var::X) == a.tau * divergence(a.M1, a.N1);
}

bool verify_iif(const BiPoly& M, const BiPoly& N, const IIFResult& r) {
  BiPoly P(1);
  for (const auto& [p, a] : r.darboux) {
    if (a < 0) return false;
    P *= p.pow(static_cast<unsigned>(a));
  }
  if (!r.exp_part.is_zero() && r.exp_part.depends_on(Var::Y)) return false;
  return N * (r.exp_part * P + P.derive(Var::X)) + M * P.derive(Var::Y) == divergence(M, N) * P;
}

std::optional<IIFResult> liouvillian_from_basis(const BiPoly& M, const BiPoly& N, const std::vector<BiPoly>& basis,
                                                int degG) {
  const BiPoly T0 = divergence(M, N);
  BiPoly P(1);
  for (const auto& p : basis) P *= p;
  // Column of alpha_i: (N*p_i,x + M*p_i,y) * P/p_i.
  std::vector<BiPoly> alpha_cols;
  for (const auto& p : basis)
    alpha_cols.push_back((N * p.derive(Var::X) + M * p.derive(Var::Y)) * *exact_div(P, p));
  const BiPoly NP = N * P, target = T0 * P;
  for (int dg = -1; dg <= degG; ++dg) {
    LinSystem sys;
    std::map<Monomial, LinSystem::Row> rows;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      sys.add_unknown("alpha_" + std::to_string(i));
      for (const auto& t : alpha_cols[i].terms()) rows[t.mono].emplace_back(i, t.coef);
    }
    for (int k = 0; k <= dg; ++k) {
      const std::size_t col = sys.add_unknown("g_" + std::to_string(k));
      for (const auto& t : NP.terms()) rows[t.mono * Monomial{k, 0}].emplace_back(col, t.coef);
    }
    for (const auto& t : target.terms()) rows[t.mono];
    for (auto& [mono, row] : rows) sys.add_row(std::move(row), target.coeff(mono));
    const SolutionSpace s = solve_linear(sys);
    if (!s.consistent || !s.particular) continue;
    const auto& v = *s.particular;
    IIFResult r;
    bool ok = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!is_integer(v[i]) || v[i] < 0) {
        ok = false;
        break;
      }
      if (v[i] != 0) r.darboux.emplace_back(basis[i], static_cast<int>(v[i].get_num().get_si()));
    }
    if (!ok) continue;
    std::vector<BiPoly::Term> g;
    for (int k = 0; k <= dg; ++k) g.push_back({{k, 0}, v[basis.size() + static_cast<std::size_t>(k)]});
    r.exp_part = BiPoly::from_terms(std::move(g));
    if (verify_iif(M, N, r)) return r;
  }
  return std::nullopt;
}

namespace {

// Members of the family that satisfy the auxiliary condition, one per
// rational solution of the quadratic parameter system.
std::vector<AuxiliarySystem> impose_condition(const std::vector<AuxiliarySystem>& fam, bool* inconclusive) {
  const std::size_t d = fam.size();
  std::vector<AuxiliarySystem> out;
  if (d == 0) return out;
  if (d - 1 > GroebnerLimits{}.max_unknowns) {
    *inconclusive = true;
    return out;
  }
  // E(lambda) = sum_k sum_l lambda_k lambda_l E_kl.
  std::vector<std::vector<BiPoly>> E(d, std::vector<BiPoly>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      E[k][l] = fam[k].M1 * fam[l].tau.derive(Var::Y) + fam[k].N1 * fam[l].tau.derive(Var::X) -
                fam[l].tau * divergence(fam[k].M1, fam[k].N1);
  for (std::size_t lead = 0; lead < d; ++lead) {
    // lambda_j = 0 for j < lead, lambda_lead = 1, the rest are variables.
    const std::size_t nv = d - lead - 1;
    auto lam = [&](std::size_t k) {
      return k == lead ? MPoly(nv, Rat(1)) : MPoly::var(nv, k - lead - 1);
    };
    std::map<Monomial, MPoly> eq;
    for (std::size_t k = lead; k < d; ++k)
      for (std::size_t l = lead; l < d; ++l) {
        if (E[k][l].is_zero()) continue;
        const MPoly w = lam(k) * lam(l);
        for (const auto& t : E[k][l].terms()) {
          auto [it, ins] = eq.try_emplace(t.mono, nv);
          it->second += w.scaled(t.coef);
        }
      }
    std::vector<MPoly> eqs;
    bool impossible = false;
    for (auto& [m, p] : eq) {
      if (p.is_zero()) continue;
      if (p.is_constant()) impossible = true;
      eqs.push_back(std::move(p));
    }
    if (impossible) continue;
    std::vector<std::vector<Rat>> points;
    if (eqs.empty() || nv == 0) {
      points.emplace_back(nv, Rat(0));
    } else {
      PolySystemResult r = solve_poly_system_small(eqs);
      if (r.inconclusive) *inconclusive = true;
      points = std::move(r.solutions);
    }
    for (const auto& p : points) {
      AuxiliarySystem a;
      for (std::size_t k = lead; k < d; ++k) {
        const Rat c = k == lead ? Rat(1) : p[k - lead - 1];
        if (c == 0) continue;
        a.M1 += fam[k].M1.scaled(c);
        a.N1 += fam[k].N1.scaled(c);
        a.tau += fam[k].tau.scaled(c);
      }
      if (a.tau.is_zero() || (a.M1.is_zero() && a.N1.is_zero())) continue;
      if (auxiliary_iif_holds(a)) out.push_back(std::move(a));
    }
  }
  return out;
}

bool same_result(const IIFResult& a, const IIFResult& b) {
  return a.exp_part == b.exp_part && a.darboux.size() == b.darboux.size() &&
         std::equal(a.darboux.begin(), a.darboux.end(), b.darboux.begin(),
                    [](const auto& p, const auto& q) { return p.first == q.first && p.second == q.second; });
}

}  // namespace

IIFSearch iif_search_n2(const BiPoly& M, const BiPoly& N, const IIFBounds& bounds) {
  IIFSearch out;
  const int dM = std::max(M.total_degree(), 0), dN = std::max(N.total_degree(), 0);
  const int lm1 = bounds.deg_M1 >= 0 ? bounds.deg_M1 : dM;
  const int ln1 = bounds.deg_N1 >= 0 ? bounds.deg_N1 : dN;
  const int lt = bounds.deg_tau >= 0 ? bounds.deg_tau : std::max(dM, dN) + 1;
  const int lg = bounds.deg_g >= 0 ? bounds.deg_g : std::max(dM, dN);
  std::vector<BiPoly> n_factors;
  for (const auto& f : factorize(N).factors_y) n_factors.push_back(f.poly);

  const int top = std::max({lm1, ln1, lt});
  for (int D = 0; D <= top; ++D) {
    const int a = std::min(D, lm1), b = std::min(D, ln1), c = std::min(D, lt);
    const LinSystem sys = assemble_fundamental(M, N, a, b, c);
    const SolutionSpace ns = nullspace(sys);
    const auto m1 = simplex(a), n1 = simplex(b);
    const auto tau = simplex(c);
    std::vector<AuxiliarySystem> fam;
    for (const auto& v : ns.basis)
      fam.push_back({combine(v, 0, m1), combine(v, m1.size(), n1), combine(v, m1.size() + n1.size(), tau)});
    for (const auto& aux : impose_condition(fam, &out.inconclusive)) {
      std::vector<BiPoly> pool;
      for (const auto& f : factorize(aux.tau).factors_y) pool.push_back(f.poly);
      for (const auto& p : n_factors)
        if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);
      auto r = liouvillian_from_basis(M, N, pool, lg);
      if (!r) continue;
      bool dup = false;
      for (const auto& o : out.results) dup = dup || same_result(o, *r);
      if (!dup) out.results.push_back(std::move(*r));
    }
    const bool has_darboux =
        std::any_of(out.results.begin(), out.results.end(), [](const IIFResult& r) { return !r.darboux.empty(); });
    if (has_darboux) {
      out.degree_used = D;
      break;
    }
  }
  std::stable_sort(out.results.begin(), out.results.end(), [](const IIFResult& x, const IIFResult& y) {
    return !x.darboux.empty() && y.darboux.empty();
  });
  if (out.degree_used < 0 && !out.results.empty()) out.degree_used = top;
  return out;
}

}  // namespace abelred
