#include <gtest/gtest.h>

#include "abelred/forward.hpp"
#include "abelred/parser.hpp"
#include "abelred/poly_algebra.hpp"
#include "abelred/reducer.hpp"
#include "fixtures.hpp"

using namespace abelred;

namespace {

BiPoly P(const std::string& s) { return parse_poly(s); }

ReducedODE cubic_base() { return {P("x"), {BiPoly(), BiPoly(), P("-x-1"), P("x")}}; }

// t' with N*c = t'*W*B^(n-2), if it is a polynomial in x.
std::optional<BiPoly> matching_t(const Fixture& f) {
  const int n = f.base.n();
  const BiPoly W = f.B * f.A.derive(Var::Y) - f.A * f.B.derive(Var::Y);
  auto t = exact_div(f.ode.N * f.expected_c, W * f.B.pow(static_cast<unsigned>(n - 2)));
  if (!t || t->depends_on(Var::Y)) return std::nullopt;
  return t;
}

}  // namespace

TEST(ForwardTransform, LinearCanceledFactorDegrees) {
  const Fixture f = forward_transform(cubic_base(), P("(y+x+1)^2*(y^2+x-1)"), P("(x*y-2)^2*(y+x^2-1)^2"));
  EXPECT_EQ(f.ode.M.total_degree(), 19);
  EXPECT_EQ(f.ode.N.total_degree(), 19);
  EXPECT_EQ(f.ode.M.coeff({13, 6}), 4);
  EXPECT_EQ(f.expected_c, P("y+x+1"));
  EXPECT_EQ(f.canceled_x, BiPoly(1));
  const InputODE oracle = abelred::testing::load_ode("n3_cancel_linear.txt");
  EXPECT_EQ(f.ode.M, oracle.M);
  EXPECT_EQ(f.ode.N, oracle.N);
}

TEST(ForwardTransform, CubicCanceledFactorDegrees) {
  const Fixture f = forward_transform(cubic_base(), P("(y+x+1)^4"), P("(x*y-2)^3*(y+x^2-1)"));
  EXPECT_EQ(f.ode.M.total_degree(), 17);
  EXPECT_EQ(f.ode.N.total_degree(), 17);
  EXPECT_EQ(f.expected_c.deg_y(), 3);
  const InputODE oracle = abelred::testing::load_ode("n3_cancel_cubic.txt");
  EXPECT_EQ(f.ode.M, oracle.M);
  EXPECT_EQ(f.ode.N, oracle.N);
}

TEST(ForwardTransform, UnexpectedLinearFactorInX) {
  const ReducedODE base{P("x"), {BiPoly(), BiPoly(), P("-x^2-1"), BiPoly(), BiPoly(), BiPoly(1)}};
  const Fixture f = forward_transform(base, P("(y+x+1)^3*(y*x+2)^2"), P("(y*x+3*x-1)*(x^2+y+1)^4"));
  const InputODE oracle = abelred::testing::load_ode("n5_t_refinement.txt");
  EXPECT_EQ(f.ode.M, oracle.M);
  EXPECT_EQ(f.ode.N, oracle.N);
  EXPECT_EQ(f.expected_c, P("(y+x+1)^2*(y*x+2)"));
}

TEST(ForwardTransform, IdentityTransformation) {
  const Fixture f = forward_transform({BiPoly(1), {BiPoly(), BiPoly(1), BiPoly()}}, P("y"), BiPoly(1));
  EXPECT_EQ(f.ode.M, P("y"));
  EXPECT_EQ(f.ode.N, BiPoly(1));
}

TEST(ForwardTransform, DegenerateInputsThrow) {
  EXPECT_THROW(forward_transform(cubic_base(), P("x+1"), P("x")), std::invalid_argument);
  EXPECT_THROW(forward_transform(cubic_base(), P("(y+1)*x"), P("y+1")), std::invalid_argument);
  EXPECT_THROW(forward_transform(cubic_base(), BiPoly(2), BiPoly(3)), std::invalid_argument);
}

TEST(ForwardTransform, RawDenominatorDegree) {
  // deg_y of t*(B*A_y - A*B_y)*B^(n-2) is deg A + deg B - 1 + (n-2)*deg B
  // when the y-degrees differ and at most one less when they agree.
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"y^3+x*y+1", "y^2+x"}, {"x*y^2+3", "y^4-x*y+2"}, {"2*y^2+x", "y^2+y+x"}, {"y+x", "3*y-x^2"}};
  for (const auto& [a, b] : pairs)
    for (int n = 3; n <= 5; ++n) {
      const BiPoly A = P(a), B = P(b);
      const BiPoly Nraw = P("x") * (B * A.derive(Var::Y) - A * B.derive(Var::Y)) * B.pow(static_cast<unsigned>(n - 2));
      const int bound = A.deg_y() + B.deg_y() - 1 + (n - 2) * B.deg_y();
      if (A.deg_y() != B.deg_y())
        EXPECT_EQ(Nraw.deg_y(), bound) << a << " / " << b;
      else
        EXPECT_LE(Nraw.deg_y(), bound - 1) << a << " / " << b;
    }
}

TEST(RandomFixture, ForcedCancellationLeavesFactorInY) {
  FixtureLimits lim;
  lim.force_cancellation = true;
  const Fixture f = random_fixture(1, lim);
  EXPECT_FALSE(f.expected_c.is_constant());
  EXPECT_TRUE(f.base.coeffs[0].is_zero());
  EXPECT_TRUE(exact_div(f.A, f.expected_c).has_value());
}

TEST(RandomFixture, NonzeroConstantTermCancelsNothingInY) {
  const Fixture f = random_fixture(2, {});
  EXPECT_FALSE(f.base.coeffs[0].is_zero());
  EXPECT_EQ(f.expected_c, BiPoly(1));
}

TEST(RandomFixture, InvalidLimitsThrow) {
  FixtureLimits lim;
  lim.max_deg_A = 0;
  EXPECT_THROW(random_fixture(1, lim), std::invalid_argument);
  lim.max_deg_A = 1;
  lim.force_cancellation = true;
  EXPECT_THROW(random_fixture(1, lim), std::invalid_argument);
}

TEST(RandomFixture, DeterministicPerSeed) {
  for (std::uint64_t seed : {3u, 4u, 17u}) {
    const Fixture a = random_fixture(seed, {}), b = random_fixture(seed, {});
    EXPECT_EQ(a.ode.M, b.ode.M);
    EXPECT_EQ(a.ode.N, b.ode.N);
    EXPECT_EQ(a.A, b.A);
  }
  EXPECT_NE(random_fixture(3, {}).ode.N, random_fixture(4, {}).ode.N);
}

TEST(RandomFixture, GeneratingTupleVerifies) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    FixtureLimits lim;
    lim.force_cancellation = seed % 2 == 1;
    const Fixture f = random_fixture(seed, lim);
    ASSERT_TRUE(gcd(f.A, f.B).is_constant());
    const auto t = matching_t(f);
    ASSERT_TRUE(t.has_value()) << "seed " << seed;
    const int n = f.base.n();
    const auto coeffs = solve_f(f.ode.M, f.A, f.B, f.expected_c, *t, n);
    ASSERT_TRUE(coeffs.has_value()) << "seed " << seed;
    ReductionSolution s{f.A, f.B, f.expected_c, *t, n, reduced_from_rational(*coeffs), false, {}};
    EXPECT_TRUE(verify_solution(f.ode, s)) << "seed " << seed;
    EXPECT_EQ(s.reduced, normalize_reduced(f.base)) << "seed " << seed;
  }
}

TEST(RandomFixture, TextRoundTrip) {
  const Fixture f = random_fixture(5, {});
  const InputODE back = parse_ode(fixture_to_text(f));
  EXPECT_EQ(back.M, f.ode.M);
  EXPECT_EQ(back.N, f.ode.N);
}
