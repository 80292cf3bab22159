#include <gtest/gtest.h>

#include "abelred/candidates.hpp"
#include "abelred/factor.hpp"
#include "abelred/parser.hpp"
#include "fixtures.hpp"

using namespace abelred;

namespace {

BiPoly P(const std::string& s) { return parse_poly(s); }

DegreeProfile prof(int n, int a, int b, Branch br, int cany) { return {n, a, b, br, cany}; }

}  // namespace

TEST(DegreeProfiles, SingleProfileWithoutCancellation) {
  auto got = degree_profiles(20, 13, 0, 9, 5);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0], prof(4, 5, 3, Branch::ADominant, 0));
}

TEST(DegreeProfiles, FourProfilesAtCanceledDegreeFour) {
  auto got = degree_profiles(20, 13, 4, 9, 5);
  std::vector<DegreeProfile> want{prof(3, 2, 8, Branch::BDominant, 4), prof(3, 8, 5, Branch::ADominant, 4),
                                  prof(4, 0, 6, Branch::BDominant, 4), prof(4, 6, 4, Branch::ADominant, 4)};
  EXPECT_EQ(got, want);
}

TEST(DegreeProfiles, QuarticPowerOfY) {
  auto got = degree_profiles(4, 0, 0, 1, 2);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0], prof(4, 1, 0, Branch::ADominant, 0));
}

TEST(DegreeProfiles, PowerCubeFixtureTraceAcrossCanceledDegrees) {
  const InputODE ode = abelred::testing::load_ode("n4_power_cube.txt");
  EXPECT_EQ(ode.M.deg_y(), 20);
  EXPECT_EQ(ode.N.deg_y(), 13);
  const int mm = factorize(ode.N).max_y_multiplicity();
  EXPECT_EQ(degree_profiles(20, 13, 1, 9, mm),
            (std::vector<DegreeProfile>{prof(3, 1, 7, Branch::BDominant, 1), prof(3, 7, 4, Branch::ADominant, 1),
                                        prof(7, 3, 2, Branch::ADominant, 1)}));
  EXPECT_TRUE(degree_profiles(20, 13, 2, 9, mm).empty());
  EXPECT_TRUE(degree_profiles(20, 13, 3, 9, mm).empty());
}

TEST(DegreeProfiles, EveryProfileSatisfiesItsBranchEquation) {
  for (int dm = 0; dm < 25; ++dm)
    for (int dn = 0; dn < 20; ++dn)
      for (int cany = 0; cany < 6; ++cany)
        for (const auto& p : degree_profiles(dm, dn, cany, 7, 4)) {
          const int inew = dm + cany, jnew = dn + cany;
          if (p.branch == Branch::ADominant) {
            EXPECT_EQ(p.a_y + p.b_y - 1 + (p.n - 2) * p.b_y, jnew);
            EXPECT_EQ(inew, p.n * p.a_y);
            EXPECT_GT(p.a_y, p.b_y);
            EXPECT_LE(p.a_y, 7);
          } else {
            EXPECT_EQ(p.a_y + p.b_y - 1 + (p.n - 2) * p.b_y, jnew);
            EXPECT_TRUE(inew == p.n * p.b_y || inew <= jnew + 1);
            EXPECT_LT(p.a_y, p.b_y);
          }
          EXPECT_GT(std::max(p.a_y, p.b_y), cany);
        }
}

TEST(BCandidates, SquaredFactorsAllowedAtNThree) {
  FactorSet fs;
  fs.factors_y = {{P("x*y-2"), 2}, {P("y+x^2-1"), 2}};
  auto got = build_B_candidates(fs, prof(3, 4, 4, Branch::BDominant, 1));
  bool found = false;
  for (const auto& c : got) found |= c.poly == P("(x*y-2)^2*(y+x^2-1)^2");
  EXPECT_TRUE(found);
  for (const auto& c : got) EXPECT_EQ(c.poly.deg_y(), 4);
}

TEST(BCandidates, MultiplicityBoundExcludes) {
  FactorSet fs;
  fs.factors_y = {{P("y+x"), 1}};
  EXPECT_TRUE(build_B_candidates(fs, prof(4, 3, 2, Branch::ADominant, 0)).empty());
}

TEST(BCandidates, ZeroTargetGivesOne) {
  FactorSet fs;
  fs.factors_y = {{P("y+x"), 3}};
  auto got = build_B_candidates(fs, prof(4, 1, 0, Branch::ADominant, 0));
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].poly, BiPoly(1));
}

TEST(BCandidates, LexicographicOrder) {
  FactorSet fs;
  fs.factors_y = {{P("y"), 2}, {P("y+1"), 2}};
  auto got = build_B_candidates(fs, prof(3, 3, 2, Branch::ADominant, 0));
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0].poly, P("(y+1)^2"));
  EXPECT_EQ(got[1].poly, P("y*(y+1)"));
  EXPECT_EQ(got[2].poly, P("y^2"));
}

TEST(TCandidates, RefinementDropsSpuriousFactor) {
  const InputODE ode = abelred::testing::load_ode("n5_t_refinement.txt");
  const FactorSet fs = factorize(ode.N);
  const BiPoly t0 = fs.x_part();
  EXPECT_EQ(t0, P("x*(x-1)"));
  auto got = build_t_candidates(t0, P("(x^2+y+1)^4*(y*x+3*x-1)"), ode.M);
  // A(0,y) and B(0,y) share (y+1), so the check also passes at x = 0 and
  // x - 1 stays in the list. The correct t = x comes before it.
  EXPECT_EQ(got, (std::vector<BiPoly>{P("x^2-x"), P("x"), P("x-1")}));
}

TEST(TCandidates, NoFactorPasses) {
  auto got = build_t_candidates(P("x"), P("y+1"), P("y^2+2"));
  EXPECT_EQ(got, std::vector<BiPoly>{P("x")});
}

TEST(TCandidates, ConstantT) { EXPECT_EQ(build_t_candidates(BiPoly(1), P("y"), P("y")), std::vector<BiPoly>{BiPoly(1)}); }

TEST(PowerCase, Exponents) {
  EXPECT_EQ(power_case_exponents(prof(4, 6, 4, Branch::ADominant, 4)), std::vector<int>{3});
  EXPECT_TRUE(power_case_exponents(prof(4, 5, 3, Branch::ADominant, 0)).empty());
  EXPECT_TRUE(power_case_exponents(prof(4, 4, 3, Branch::ADominant, 1)).empty());
  EXPECT_EQ(power_case_exponents(prof(6, 3, 4, Branch::BDominant, 2)), (std::vector<int>{3, 2}));
  EXPECT_EQ(power_case_exponents(prof(8, 2, 3, Branch::BDominant, 2)), std::vector<int>{3});
}
