#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "abelred/factor.hpp"
#include "abelred/parser.hpp"
#include "abelred/poly_algebra.hpp"

using namespace abelred;

namespace {

constexpr int kCases = 500;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rat small_rat() {
    Rat r(range(-9, 9), range(1, 4));
    r.canonicalize();
    return r;
  }

  // Random polynomial with total degree <= d, possibly zero.
  BiPoly poly(int d, int density = 2) {
    std::vector<BiPoly::Term> t;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j)
        if (range(0, density) == 0) t.push_back({{i, j}, Rat(range(-6, 6))});
    return BiPoly::from_terms(std::move(t));
  }

  BiPoly nonzero(int d) {
    for (;;)
      if (BiPoly p = poly(d); !p.is_zero()) return p;
  }

  BiPoly xpoly(int d) {
    std::vector<BiPoly::Term> t;
    for (int i = 0; i <= d; ++i) t.push_back({{i, 0}, Rat(range(-5, 5))});
    return BiPoly::from_terms(std::move(t));
  }

  // a*v + b with coprime coefficient polynomials a != 0 in the other
  // variable: irreducible.
  BiPoly irreducible() {
    for (;;) {
      const bool in_y = range(0, 1) == 1;
      const BiPoly a = xpoly(range(0, 2)), b = xpoly(range(0, 2));
      if (a.is_zero() || b.is_zero() || !gcd(a, b).is_constant()) continue;
      if (in_y) return normalize(a * BiPoly::y() + b);
      // Same shape with the roles of x and y exchanged.
      auto swap = [](const BiPoly& p) {
        std::vector<BiPoly::Term> t;
        for (const auto& term : p.terms()) t.push_back({{term.mono.y, term.mono.x}, term.coef});
        return BiPoly::from_terms(std::move(t));
      };
      const BiPoly q = swap(a) * BiPoly::x() + swap(b);
      if (q.depends_on(Var::Y)) return normalize(q);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

TEST(KernelProperties, ExactDivisionUndoesMultiplication) {
  Gen g(101);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly p = g.nonzero(4), q = g.nonzero(4);
    const auto d = exact_div(p * q, q);
    ASSERT_TRUE(d.has_value()) << p.to_string() << " | " << q.to_string();
    EXPECT_EQ(*d, p);
    if (!q.is_constant()) {
      // p*q + 1 is never a multiple of q.
      EXPECT_FALSE(exact_div(p * q + BiPoly(1), q).has_value());
    }
  }
}

TEST(KernelProperties, GcdOfCommonMultiples) {
  Gen g(202);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly p = g.nonzero(3), q = g.nonzero(3), h = g.nonzero(3);
    const BiPoly lhs = gcd(p * h, q * h);
    const BiPoly rhs = normalize(h * gcd(p, q));
    EXPECT_EQ(normalize(lhs), rhs) << p.to_string() << "; " << q.to_string() << "; " << h.to_string();
    EXPECT_TRUE(exact_div(p * h, lhs).has_value());
    EXPECT_TRUE(exact_div(q * h, lhs).has_value());
  }
}

TEST(KernelProperties, SingleDivisorRemainder) {
  Gen g(303);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly d = g.nonzero(3);
    const bool multiple = i % 2 == 0;
    const BiPoly f = multiple ? g.poly(3) * d : g.poly(5);
    const MonomialOrder order = i % 4 < 2 ? MonomialOrder::TdegYX : MonomialOrder::TdegXY;
    const DivisionResult r = reduce_modulo(f, {d}, order);
    ASSERT_EQ(r.quotients.size(), 1u);
    EXPECT_EQ(r.quotients[0] * d + r.remainder, f);
    // No term of the remainder is divisible by lt(d).
    const Monomial lt = d.leading_term(order).mono;
    for (const auto& t : r.remainder.terms()) EXPECT_FALSE(lt.divides(t.mono));
    EXPECT_EQ(r.remainder.is_zero(), exact_div(f, d).has_value()) << f.to_string() << " / " << d.to_string();
    if (multiple) EXPECT_TRUE(r.remainder.is_zero());
  }
}

TEST(KernelProperties, FactorizationRecoversProduct) {
  Gen g(404);
  for (int i = 0; i < kCases; ++i) {
    std::vector<std::pair<BiPoly, int>> want;
    const int k = g.range(1, 3);
    while (static_cast<int>(want.size()) < k) {
      const BiPoly f = g.irreducible();
      if (std::none_of(want.begin(), want.end(), [&](const auto& w) { return w.first == f; }))
        want.emplace_back(f, g.range(1, 3));
    }
    const Rat content = g.range(1, 7);
    BiPoly p(content);
    for (const auto& [f, e] : want) p *= f.pow(static_cast<unsigned>(e));
    const FactorSet fs = factorize(p);
    EXPECT_EQ(fs.content, content);
    std::vector<std::pair<BiPoly, int>> got;
    for (const auto* v : {&fs.units_x, &fs.factors_y})
      for (const auto& f : *v) got.emplace_back(f.poly, f.multiplicity);
    auto key = [](const auto& a, const auto& b) { return a.first.to_string() < b.first.to_string(); };
    std::sort(want.begin(), want.end(), key);
    std::sort(got.begin(), got.end(), key);
    ASSERT_EQ(got.size(), want.size()) << p.to_string();
    for (std::size_t j = 0; j < got.size(); ++j) {
      EXPECT_EQ(got[j].first, want[j].first) << p.to_string();
      EXPECT_EQ(got[j].second, want[j].second) << p.to_string();
    }
  }
}

TEST(KernelProperties, FactorDegreesAddUp) {
  Gen g(505);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly p = g.nonzero(4) * g.nonzero(3);
    if (p.is_constant()) continue;
    const FactorSet fs = factorize(p);
    int dx = 0, dy = 0;
    BiPoly back(fs.content);
    for (const auto* v : {&fs.units_x, &fs.factors_y})
      for (const auto& f : *v) {
        dx += f.multiplicity * f.poly.deg_x();
        dy += f.multiplicity * f.poly.deg_y();
        back *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
        EXPECT_EQ(f.poly, normalize(f.poly));
      }
    EXPECT_EQ(dx, p.deg_x());
    EXPECT_EQ(dy, p.deg_y());
    EXPECT_EQ(back, p);
  }
}

TEST(KernelProperties, ProductRule) {
  Gen g(606);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly p = g.poly(4), q = g.poly(4);
    for (Var v : {Var::X, Var::Y}) EXPECT_EQ((p * q).derive(v), p.derive(v) * q + p * q.derive(v));
  }
}

TEST(KernelProperties, EvaluationIsHomomorphism) {
  Gen g(707);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly p = g.poly(4), q = g.poly(4);
    const Rat x0 = g.small_rat(), y0 = g.small_rat();
    const Rat a = p.eval(x0, y0), b = q.eval(x0, y0);
    EXPECT_EQ((p + q).eval(x0, y0), a + b);
    EXPECT_EQ((p - q).eval(x0, y0), a - b);
    EXPECT_EQ((p * q).eval(x0, y0), a * b);
  }
}

TEST(KernelProperties, PrintParseRoundTrip) {
  Gen g(808);
  for (int i = 0; i < kCases; ++i) {
    BiPoly p = g.poly(5);
    p = p.scaled(g.small_rat());
    EXPECT_EQ(parse_poly(p.to_string()), p) << p.to_string();
  }
}
