#include "abelred/forward.hpp"

#include <random>
#include <stdexcept>

#include "abelred/poly_algebra.hpp"

namespace abelred {

Fixture forward_transform(const ReducedODE& base, const BiPoly& A, const BiPoly& B) {
  const int n = base.n();
  if (n < 2) throw std::invalid_argument("base equation needs degree at least 2 in y");
  if (A.is_constant() && B.is_constant()) throw std::invalid_argument("A and B are both constant");
  if (!gcd(A, B).is_constant()) throw std::invalid_argument("A and B have a common factor");
  const BiPoly& t = base.t;
  const BiPoly Bn2 = B.pow(static_cast<unsigned>(n - 2));
  const BiPoly W = B * A.derive(Var::Y) - A * B.derive(Var::Y);
  const BiPoly Nraw = t * W * Bn2;
  if (Nraw.is_zero()) throw std::invalid_argument("A/B does not depend on y");
  BiPoly Mraw = -(t * (B * A.derive(Var::X) - A * B.derive(Var::X)) * Bn2);
  BiPoly Ai(1);
  for (int i = 0; i <= n; ++i) {
    const BiPoly& f = base.coeffs[static_cast<std::size_t>(i)];
    if (!f.is_zero()) Mraw += f * Ai * B.pow(static_cast<unsigned>(n - i));
    Ai *= A;
  }
  const BiPoly g = gcd(Mraw, Nraw);
  Fixture out;
  out.base = base;
  out.A = A;
  out.B = B;
  out.ode = make_input_ode(*exact_div(Mraw, g), *exact_div(Nraw, g));
  out.canceled_x = normalize(BiPoly::from_upoly(content_y(g), Var::X));
  out.expected_c = normalize(primitive_y(g));
  return out;
}

namespace {

class Draw {
 public:
  Draw(std::uint64_t seed, int height) : rng_(seed), height_(height) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  int coef() { return uniform(-height_, height_); }
  int nonzero_coef() {
    int c = 0;
    while (c == 0) c = coef();
    return c;
  }

  // Dense random polynomial of total degree exactly d (when d >= 1) with deg_y >= 1.
  BiPoly poly(int d) {
    for (;;) {
      std::vector<BiPoly::Term> terms;
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
          if (uniform(0, 2) > 0) terms.push_back({{i, j}, Rat(coef())});
      terms.push_back({{0, d}, Rat(nonzero_coef())});  // keeps deg_y = d
      BiPoly p = BiPoly::from_terms(std::move(terms));
      if (p.deg_y() >= 1 && p.total_degree() == d) return normalize(p);
    }
  }

  // Polynomial in x of degree <= d.
  BiPoly xpoly(int d) {
    std::vector<BiPoly::Term> terms;
    for (int i = 0; i <= d; ++i) terms.push_back({{i, 0}, Rat(coef())});
    return BiPoly::from_terms(std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
  int height_;
};

// The representative of A + h(x)*B whose coefficients at x^i * lm(B)
// vanish, with i + deg B <= deg A as in the cancel-system gauge rows.
BiPoly gauge_reduce(BiPoly A, const BiPoly& B) {
  const Monomial lmB = B.leading_term().mono;
  const Rat lcB = B.leading_coeff();
  for (int i = A.total_degree() - B.total_degree(); i >= 0; --i) {
    const Rat a = A.coeff({lmB.x + i, lmB.y});
    if (a != 0) A -= B.shifted({i, 0}).scaled(a / lcB);
  }
  return A;
}

}  // namespace

Fixture random_fixture(std::uint64_t seed, const FixtureLimits& lim) {
  if (lim.max_deg_A < 1) throw std::invalid_argument("max_deg_A must be at least 1");
  if (lim.force_cancellation && lim.max_deg_A < 2)
    throw std::invalid_argument("forced cancellation needs max_deg_A >= 2");
  if (lim.max_deg_B < 1 || lim.max_n < 3 || lim.height < 1) throw std::invalid_argument("invalid fixture limits");
  Draw d(seed, lim.height);
  for (;;) {
    const int n = d.uniform(3, lim.max_n);
    ReducedODE base;
    base.t = d.uniform(0, 1) ? BiPoly::from_terms({{{1, 0}, Rat(1)}}) : BiPoly(1);
    base.coeffs.resize(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) base.coeffs[static_cast<std::size_t>(i)] = d.xpoly(1);
    base.coeffs[static_cast<std::size_t>(n)] = BiPoly(d.nonzero_coef());
    if (lim.force_cancellation) base.coeffs[0] = BiPoly();
    base = normalize_reduced(base);
    if (base.n() != n) continue;

    BiPoly A;
    if (lim.force_cancellation) {
      const BiPoly p = d.poly(1);
      const int rest = d.uniform(0, lim.max_deg_A - 2);
      A = p * p * (rest > 0 ? d.poly(rest) : BiPoly(1));
    }
    const BiPoly B = d.poly(d.uniform(1, lim.max_deg_B));
    if (!lim.force_cancellation) {
      // Without cancellation A + h(x)*B and a(x)*A give equivalent
      // reductions; keep the one representative the solver reports.
      A = gauge_reduce(d.poly(d.uniform(1, lim.max_deg_A)), B);
      if (A.deg_y() < 1 || content_y(A).degree() > 0) continue;
      A = normalize(A);
    }
    if (!gcd(A, B).is_constant()) continue;
    try {
      Fixture f = forward_transform(base, A, B);
      if (lim.force_cancellation && f.expected_c.is_constant()) continue;
      return f;
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
}

std::string fixture_to_text(const Fixture& f) {
  return "# base: " + f.base.to_string() + "\n# A = " + f.A.to_string() + "\n# B = " + f.B.to_string() +
         "\nM = " + f.ode.M.to_string() + "\nN = " + f.ode.N.to_string() + "\n";
}

}  // namespace abelred
