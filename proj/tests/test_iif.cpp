#include <gtest/gtest.h>

#include <algorithm>

#include "abelred/iif.hpp"
#include "abelred/linalg.hpp"
#include "abelred/parser.hpp"
#include "fixtures.hpp"

using namespace abelred;

namespace {

BiPoly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST(InverseIntegratingFactor, DarbouxFactorPreferredForLinearGrowth) {
  // y' = y admits both mu = y and mu = e^x; the Darboux one comes first.
  const IIFSearch s = iif_search_n2(P("y"), BiPoly(1));
  ASSERT_FALSE(s.results.empty());
  const IIFResult& r = s.results.front();
  EXPECT_TRUE(r.exp_part.is_zero());
  ASSERT_EQ(r.darboux.size(), 1u);
  EXPECT_EQ(r.darboux[0].first, P("y"));
  EXPECT_EQ(r.darboux[0].second, 1);
  EXPECT_TRUE(verify_iif(P("y"), BiPoly(1), r));
}

TEST(InverseIntegratingFactor, ConstantTauFindsNothingForQuadratic) {
  IIFBounds b;
  b.deg_tau = 0;
  EXPECT_TRUE(iif_search_n2(P("y^2"), BiPoly(1), b).results.empty());
}

TEST(InverseIntegratingFactor, ExponentsAndExponentialFromKnownFactors) {
  const InputODE ode = abelred::testing::load_ode("n2_liouvillian.txt");
  auto r = liouvillian_from_basis(ode.M, ode.N, {P("y*x+2"), P("y+x+1")}, 2);
  ASSERT_TRUE(r.has_value());
  ASSERT_EQ(r->darboux.size(), 2u);
  EXPECT_EQ(r->darboux[0].second, 3);
  EXPECT_EQ(r->darboux[1].second, 4);
  EXPECT_EQ(r->exp_part, P("x^2+1"));
  EXPECT_EQ(r->exponent(), P("1/3*x^3+x").as_upoly(Var::X));
  EXPECT_TRUE(verify_iif(ode.M, ode.N, *r));
}

TEST(InverseIntegratingFactor, NonDarbouxBasisLeavesOnlyTheExponential) {
  // y+1 is not a Darboux polynomial of y' = y; the only (alpha, g) is (0, 1), mu = e^x.
  auto r = liouvillian_from_basis(P("y"), BiPoly(1), {P("y+1")}, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->darboux.empty());
  EXPECT_EQ(r->exp_part, BiPoly(1));
  EXPECT_FALSE(liouvillian_from_basis(P("y"), BiPoly(1), {P("y+1")}, -1).has_value());
}

TEST(InverseIntegratingFactor, DarbouxBasisUsesZeroExponential) {
  auto r = liouvillian_from_basis(P("y"), BiPoly(1), {P("y")}, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->exp_part.is_zero());
  ASSERT_EQ(r->darboux.size(), 1u);
  EXPECT_EQ(r->darboux[0].second, 1);
}

TEST(InverseIntegratingFactor, FullSearchOnTransformedRiccati) {
  const InputODE ode = abelred::testing::load_ode("n2_liouvillian.txt");
  const IIFSearch s = iif_search_n2(ode.M, ode.N);
  EXPECT_FALSE(s.inconclusive);
  ASSERT_FALSE(s.results.empty());
  const IIFResult& r = s.results.front();
  EXPECT_EQ(r.exp_part, P("x^2+1"));
  std::vector<std::pair<BiPoly, int>> want{{P("y+x+1"), 4}, {P("x*y+2"), 3}};
  ASSERT_EQ(r.darboux.size(), 2u);
  for (const auto& w : want)
    EXPECT_NE(std::find(r.darboux.begin(), r.darboux.end(), w), r.darboux.end()) << w.first.to_string();
  EXPECT_TRUE(verify_iif(ode.M, ode.N, r));
}

TEST(InverseIntegratingFactor, PerturbedExponentFailsVerification) {
  const InputODE ode = abelred::testing::load_ode("n2_liouvillian.txt");
  IIFResult r{P("x^2+1"), {{P("y*x+2"), 3}, {P("y+x+1"), 5}}};
  EXPECT_FALSE(verify_iif(ode.M, ode.N, r));
}

TEST(FundamentalEquation, ShapeAndKnownSolution) {
  // M = y, N = 1: M*N1 - M1*N - (M_y + N_x)*tau vanishes at (M1, N1, tau) = (y, 1, 0)
  // and is -1 at (y, 1, 1).
  const LinSystem sys = assemble_fundamental(P("y"), BiPoly(1), 1, 0, 0);
  EXPECT_EQ(sys.num_unknowns(), 5u);
  // Unknowns: m1 over {y, x, 1}, then n1 over {1}, then tau over {1}.
  EXPECT_TRUE(satisfies(sys, {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0)}));
  EXPECT_FALSE(satisfies(sys, {Rat(1), Rat(0), Rat(0), Rat(1), Rat(1)}));
  EXPECT_TRUE(auxiliary_iif_holds({P("y"), BiPoly(1), P("y")}));
  EXPECT_FALSE(auxiliary_iif_holds({P("y"), BiPoly(1), P("y+1")}));
}
