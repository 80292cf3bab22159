#include "abelred/candidates.hpp"

#include <algorithm>

#include "abelred/poly_algebra.hpp"

namespace abelred {

namespace {

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

}  // namespace

std::vector<DegreeProfile> degree_profiles(int deg_y_M, int deg_y_N, int cany, int degreeA, int max_mult) {
  std::vector<DegreeProfile> out;
  const int inew = deg_y_M + cany;
  const int jnew = deg_y_N + cany;
  for (int n = 3; n <= max_mult + 2; ++n) {
    const int lo = std::max(ceil_div(inew, n), ceil_div(jnew + 1, n));
    // The upper limit jnew + 1 admits the b_y = 0 profiles (B = 1).
    for (int i2 = lo; i2 <= jnew + 1; ++i2) {
      for (int i3 = 0; i3 < i2; ++i3) {
        if (i2 + i3 - 1 + (n - 2) * i3 == jnew && inew == n * i2 && i2 > cany && i2 <= degreeA)
          out.push_back({n, i2, i3, Branch::ADominant, cany});
        if (i2 + i3 - 1 + (n - 2) * i2 == jnew && (inew == n * i2 || inew <= jnew + 1) && i2 > cany &&
            i3 <= degreeA)
          out.push_back({n, i3, i2, Branch::BDominant, cany});
      }
    }
  }
  return out;
}

std::vector<CandidateB> build_B_candidates(const FactorSet& fs, const DegreeProfile& profile) {
  std::vector<CandidateB> out;
  if (profile.b_y == 0) {
    out.push_back({BiPoly(1), {}});
    return out;
  }
  const int scale = profile.n - 2;
  const std::size_t k = fs.factors_y.size();
  std::vector<int> max_e(k), dy(k);
  for (std::size_t i = 0; i < k; ++i) {
    dy[i] = fs.factors_y[i].poly.deg_y();
    max_e[i] = fs.factors_y[i].multiplicity / scale;
  }
  std::vector<int> e(k, 0);
  // Depth-first over exponent vectors in lexicographic order.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == k) {
      if (remaining != 0) return;
      CandidateB c{BiPoly(1), {}};
      for (std::size_t j = 0; j < k; ++j) {
        if (e[j] == 0) continue;
        c.poly *= fs.factors_y[j].poly.pow(static_cast<unsigned>(e[j]));
        c.provenance.emplace_back(j, e[j]);
      }
      out.push_back(std::move(c));
      return;
    }
    for (int v = 0; v <= max_e[i] && v * dy[i] <= remaining; ++v) {
      e[i] = v;
      self(self, i + 1, remaining - v * dy[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, profile.b_y);
  return out;
}

std::vector<BiPoly> build_t_candidates(const BiPoly& t0, const BiPoly& B, const BiPoly& M) {
  std::vector<BiPoly> out{t0};
  if (t0.is_constant()) return out;
  const UFactorization uf = factor_univariate(t0.as_upoly(Var::X));
  for (const auto& [q, k] : uf.factors) {
    if (!divides_mod(B, M, q)) continue;
    const BiPoly qb = BiPoly::from_upoly(q, Var::X);
    BiPoly cur = t0;
    for (int m = 1; m <= k; ++m) {
      cur = *exact_div(cur, qb);
      const BiPoly cand = normalize(cur);
      if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
  }
  return out;
}

std::vector<int> power_case_exponents(const DegreeProfile& p) {
  std::vector<int> out;
  auto test = [&](int d) {
    const int diff = d - p.cany;
    if (diff <= 0 || d % diff != 0) return;
    const int k = d / diff;
    if (k >= 2 && std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  };
  test(p.a_y);
  if (p.branch == Branch::BDominant) test(p.b_y);
  return out;
}

}  // namespace abelred
