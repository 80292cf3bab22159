#include "abelred/cancel_solver.hpp"

#include <algorithm>
#include <map>

#include "abelred/groebner.hpp"
#include "abelred/mpoly.hpp"
#include "abelred/poly_algebra.hpp"

namespace abelred {

AnsatzSpec AnsatzSpec::dense(int degreeA, int cany) {
  AnsatzSpec s;
  for (int d = degreeA; d >= 0; --d)
    for (int j = d; j >= 0; --j) s.A_monomials.push_back({d - j, j});
  for (int i = degreeA - 1; i >= 0; --i)
    for (int j = cany; j >= 0; --j) s.c_monomials.push_back({i, j});
  return s;
}

namespace {

using RowMap = std::map<Monomial, LinSystem::Row>;

void add_poly_column(RowMap& rows, std::size_t col, const BiPoly& p, const Rat& scale) {
  for (const auto& t : p.terms()) rows[t.mono].emplace_back(col, t.coef * scale);
}

BiPoly combine(const std::vector<Rat>& v, std::size_t offset, const std::vector<Monomial>& monos) {
  std::vector<BiPoly::Term> terms;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (v[offset + i] != 0) terms.push_back({monos[i], v[offset + i]});
  return BiPoly::from_terms(std::move(terms));
}

}  // namespace

LinSystem assemble_cancel_system(const BiPoly& N, const BiPoly& B, const BiPoly& t, int n, const AnsatzSpec& spec) {
  LinSystem sys;
  for (const auto& m : spec.A_monomials) sys.add_unknown("a_" + std::to_string(m.x) + "_" + std::to_string(m.y));
  for (const auto& m : spec.c_monomials) sys.add_unknown("b_" + std::to_string(m.x) + "_" + std::to_string(m.y));
  const BiPoly Bn2 = B.pow(static_cast<unsigned>(n - 2));
  const BiPoly P1 = t * Bn2 * B;
  const BiPoly P2 = t * Bn2 * B.derive(Var::Y);
  RowMap rows;
  // Column of a_ij: -(j x^i y^(j-1) P1 - x^i y^j P2).
  for (std::size_t k = 0; k < spec.A_monomials.size(); ++k) {
    const Monomial m = spec.A_monomials[k];
    if (m.y > 0) add_poly_column(rows, k, P1.shifted({m.x, m.y - 1}), Rat(-m.y));
    add_poly_column(rows, k, P2.shifted(m), Rat(1));
  }
  const std::size_t off = spec.A_monomials.size();
  for (std::size_t k = 0; k < spec.c_monomials.size(); ++k)
    add_poly_column(rows, off + k, N.shifted(spec.c_monomials[k]), Rat(1));
  for (auto& [mono, row] : rows) sys.add_row(std::move(row));
  return sys;
}

bool cancel_identity_holds(const BiPoly& N, const BiPoly& A, const BiPoly& c, const BiPoly& B, const BiPoly& t,
                           int n) {
  const BiPoly W = B * A.derive(Var::Y) - A * B.derive(Var::Y);
  return N * c == t * W * B.pow(static_cast<unsigned>(n - 2));
}

CancelFamily solve_cancel_family(const BiPoly& N, const BiPoly& B, const BiPoly& t, int n, int degreeA, int cany) {
  const AnsatzSpec spec = AnsatzSpec::dense(degreeA, cany);
  LinSystem sys = assemble_cancel_system(N, B, t, n, spec);
  CancelFamily fam;
  // Pin the coefficient of x^i * lm(B) in A to zero: a complement of the
  // directions h(x)*B, which solve the homogeneous identity with c = 0.
  const Monomial lmB = B.leading_term().mono;
  for (int i = 0; i + B.total_degree() <= degreeA; ++i) {
    const Monomial m{lmB.x + i, lmB.y};
    const auto it = std::find(spec.A_monomials.begin(), spec.A_monomials.end(), m);
    sys.add_row({{static_cast<std::size_t>(it - spec.A_monomials.begin()), Rat(1)}});
    fam.free_A.push_back(B.shifted({i, 0}));
  }
  const SolutionSpace ns = nullspace(sys);
  for (const auto& v : ns.basis) {
    fam.A.push_back(combine(v, 0, spec.A_monomials));
    fam.c.push_back(combine(v, spec.A_monomials.size(), spec.c_monomials));
  }
  return fam;
}

namespace {

struct OrderLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return greater(a, b, order); }
};

using ParamPoly = std::map<Monomial, MPoly, OrderLess>;

void accumulate(ParamPoly& p, const BiPoly& f, const MPoly& weight) {
  for (const auto& t : f.terms()) {
    auto [it, inserted] = p.try_emplace(t.mono, weight.nvars());
    it->second += weight.scaled(t.coef);
    if (it->second.is_zero()) p.erase(it);
  }
}

BiPoly evaluate(const ParamPoly& p, const std::vector<Rat>& point) {
  std::vector<BiPoly::Term> terms;
  for (const auto& [m, c] : p) terms.push_back({m, c.eval(point)});
  return BiPoly::from_terms(std::move(terms));
}

// Equations for remainder(A / c) == 0 when lc(c) == 1 at m0.
std::vector<MPoly> remainder_conditions(ParamPoly A, const ParamPoly& c, Monomial m0) {
  std::vector<MPoly> eqs;
  while (!A.empty()) {
    auto it = A.begin();
    const Monomial m = it->first;
    MPoly coef = std::move(it->second);
    A.erase(it);
    if (!m0.divides(m)) {
      eqs.push_back(std::move(coef));
      continue;
    }
    const Monomial q = m / m0;
    for (const auto& [mc, cc] : c) {
      if (mc == m0) continue;
      auto [jt, inserted] = A.try_emplace(mc * q, coef.nvars());
      jt->second -= coef * cc;
      if (jt->second.is_zero()) A.erase(jt);
    }
  }
  return eqs;
}

std::optional<CancelSolution> finalize(const BiPoly& A, const BiPoly& c, const BiPoly& B, int cany) {
  if (A.is_zero() || c.is_zero() || c.deg_y() != cany) return std::nullopt;
  if (!exact_div(A, c)) return std::nullopt;
  if (!gcd(A, B).is_constant()) return std::nullopt;
  auto [An, s] = normalize_with_scale(A);
  return CancelSolution{An, c.scaled(s), 0};
}

void push_unique(std::vector<CancelSolution>& out, CancelSolution s) {
  for (const auto& o : out)
    if (o.A == s.A && o.c == s.c) return;
  out.push_back(std::move(s));
}

}  // namespace

ReduceOutcome reduce_parameters(const CancelFamily& fam, const BiPoly& B, int cany, MonomialOrder order) {
  ReduceOutcome out;
  const std::size_t d = fam.dimension();
  if (d == 0) return out;
  const OrderLess less{order};
  std::vector<Monomial> support;
  for (const auto& ck : fam.c)
    for (const auto& t : ck.terms()) support.push_back(t.mono);
  std::sort(support.begin(), support.end(), less);
  support.erase(std::unique(support.begin(), support.end()), support.end());

  for (std::size_t idx = 0; idx < support.size(); ++idx) {
    const Monomial m0 = support[idx];
    // Coefficients of c above m0 vanish.
    LinSystem above;
    for (std::size_t k = 0; k < d; ++k) above.add_unknown("l" + std::to_string(k));
    for (std::size_t s = 0; s < idx; ++s) {
      LinSystem::Row row;
      for (std::size_t k = 0; k < d; ++k) row.emplace_back(k, fam.c[k].coeff(support[s]));
      above.add_row(std::move(row));
    }
    std::vector<std::vector<Rat>> V;
    if (idx == 0) {
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<Rat> e(d);
        e[k] = 1;
        V.push_back(std::move(e));
      }
    } else {
      V = nullspace(above).basis;
    }
    if (V.empty()) continue;
    std::vector<Rat> gamma(V.size());
    std::size_t piv = V.size();
    for (std::size_t j = 0; j < V.size(); ++j) {
      for (std::size_t k = 0; k < d; ++k) gamma[j] += V[j][k] * fam.c[k].coeff(m0);
      if (piv == V.size() && gamma[j] != 0) piv = j;
    }
    if (piv == V.size()) continue;
    // lambda = v + sum u_j w_j with lc(c) = 1 throughout.
    std::vector<Rat> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = V[piv][k] / gamma[piv];
    std::vector<std::vector<Rat>> W;
    for (std::size_t j = 0; j < V.size(); ++j) {
      if (j == piv) continue;
      std::vector<Rat> w(d);
      for (std::size_t k = 0; k < d; ++k) w[k] = V[j][k] - gamma[j] * v[k];
      W.push_back(std::move(w));
    }
    const std::size_t nu = W.size(), nz = fam.free_A.size(), nv = nu + nz;
    if (nv > GroebnerLimits{}.max_unknowns) {
      out.inconclusive = true;
      continue;
    }
    ParamPoly A(less), c(less);
    auto add_lambda = [&](const std::vector<Rat>& lam, const MPoly& weight) {
      for (std::size_t k = 0; k < d; ++k) {
        if (lam[k] == 0) continue;
        accumulate(A, fam.A[k], weight.scaled(lam[k]));
        accumulate(c, fam.c[k], weight.scaled(lam[k]));
      }
    };
    add_lambda(v, MPoly(nv, Rat(1)));
    for (std::size_t j = 0; j < nu; ++j) add_lambda(W[j], MPoly::var(nv, j));
    for (std::size_t i = 0; i < nz; ++i) accumulate(A, fam.free_A[i], MPoly::var(nv, nu + i));

    std::vector<MPoly> eqs = remainder_conditions(A, c, m0);
    std::vector<std::vector<Rat>> points;
    bool sampled = false;
    if (nv == 0) {
      if (eqs.empty()) points.emplace_back();
    } else if (eqs.empty()) {
      points = {std::vector<Rat>(nv, Rat(0)), std::vector<Rat>(nv, Rat(1))};
      sampled = true;
    } else {
      bool constant_nonzero = false;
      for (const auto& e : eqs) constant_nonzero |= e.is_constant();
      if (constant_nonzero) continue;
      PolySystemResult r = solve_poly_system_small(eqs);
      if (r.inconclusive) out.inconclusive = true;
      sampled = r.sampled;
      points = std::move(r.solutions);
    }
    for (const auto& p : points) {
      if (auto s = finalize(evaluate(A, p), evaluate(c, p), B, cany)) {
        s->parameters_remaining = sampled ? static_cast<int>(nv) : 0;
        push_unique(out.solutions, std::move(*s));
      }
    }
  }
  return out;
}

ReduceOutcome reduce_parameters(const CancelFamily& family, const BiPoly& B, int cany) {
  ReduceOutcome yx = reduce_parameters(family, B, cany, MonomialOrder::TdegYX);
  if (!yx.solutions.empty()) return yx;
  ReduceOutcome xy = reduce_parameters(family, B, cany, MonomialOrder::TdegXY);
  xy.inconclusive = xy.inconclusive || yx.inconclusive;
  return xy;
}

std::optional<CancelSolution> power_case_solve(const BiPoly& N, const BiPoly& B, const BiPoly& t, int n, int k,
                                               int degreeA) {
  const int dp = degreeA / k;
  std::vector<Monomial> monos;
  for (int d = dp; d >= 0; --d)
    for (int j = d; j >= 0; --j) monos.push_back({d - j, j});
  LinSystem sys;
  for (const auto& m : monos) sys.add_unknown("p_" + std::to_string(m.x) + "_" + std::to_string(m.y));
  const std::size_t lam = sys.add_unknown("lambda");
  const BiPoly Bn2 = B.pow(static_cast<unsigned>(n - 2));
  const BiPoly P1 = t * Bn2 * B;
  const BiPoly P2 = t * Bn2 * B.derive(Var::Y);
  RowMap rows;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const Monomial m = monos[i];
    if (m.y > 0) add_poly_column(rows, i, P1.shifted({m.x, m.y - 1}), Rat(k * m.y));
    add_poly_column(rows, i, P2.shifted(m), Rat(-1));
  }
  add_poly_column(rows, lam, N, Rat(-1));
  for (auto& [mono, row] : rows) sys.add_row(std::move(row));
  const SolutionSpace ns = nullspace(sys);
  if (ns.dimension() != 1) return std::nullopt;
  const auto& v = ns.basis[0];
  if (v[lam] == 0) return std::nullopt;
  auto [P, s] = normalize_with_scale(combine(v, 0, monos));
  if (P.deg_y() < 1 || !gcd(P, B).is_constant()) return std::nullopt;
  const Rat lambda = v[lam] * s;
  CancelSolution out{P.pow(static_cast<unsigned>(k)), P.pow(static_cast<unsigned>(k - 1)).scaled(lambda), 0};
  return out;
}

}  // namespace abelred
