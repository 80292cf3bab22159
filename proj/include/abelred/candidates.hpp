#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abelred/bipoly.hpp"
#include "abelred/factor.hpp"

namespace abelred {

enum class Branch { ADominant, BDominant };

/// Degree targets for one search step.
struct DegreeProfile {
  int n = 0;
  int a_y = 0;
  int b_y = 0;
  Branch branch = Branch::ADominant;
  int cany = 0;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// All (n, deg_y A, deg_y B) compatible with the observed y-degrees of M
/// and N once a canceled factor of y-degree cany is added back. n runs
/// from 3 to max_mult + 2. Order is deterministic.
std::vector<DegreeProfile> degree_profiles(int deg_y_M, int deg_y_N, int cany, int degreeA, int max_mult);

struct CandidateB {
  BiPoly poly;
  /// (index into FactorSet::factors_y, exponent), exponents positive.
  std::vector<std::pair<std::size_t, int>> provenance;
};

/// Products of y-dependent factors of N with exponents e such that
/// (n-2)*e does not exceed the factor's multiplicity in N and the
/// y-degree equals profile.b_y. Lexicographic in the exponent vector.
std::vector<CandidateB> build_B_candidates(const FactorSet& fs, const DegreeProfile& profile);

/// t0 first, then t0/q^m for every irreducible x-only q^k | t0 at which
/// B divides M modulo q, 1 <= m <= k. Deduplicated.
std::vector<BiPoly> build_t_candidates(const BiPoly& t0, const BiPoly& B, const BiPoly& M);

/// Exponents k >= 2 with A = P^k compatible with the profile; at most two.
std::vector<int> power_case_exponents(const DegreeProfile& profile);

}  // namespace abelred
