#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abelred/bipoly.hpp"
#include "abelred/candidates.hpp"
#include "abelred/iif.hpp"
#include "abelred/ode.hpp"
#include "abelred/upoly.hpp"

namespace abelred {

/// y -> A/B with canceled factor c reduces y' = M/N to the reduced ODE.
struct ReductionSolution {
  BiPoly A, B, c;
  BiPoly t;  // x-only factor of the transformation identity
  int n = 0;
  ReducedODE reduced;
  bool power_case = false;
  DegreeProfile profile;
};

struct ReduceOptions {
  /// Continue past the first profile with a solution.
  bool all = false;
  /// Fall back to the Liouvillian inverse integrating factor search.
  bool n2 = false;
  /// Wall-clock limit for the whole search; 0 disables it.
  double timeout_sec = 0;
  /// Receives the step-by-step log; may be empty.
  std::function<void(const std::string&)> trace;
  IIFBounds iif_bounds;
};

struct ReduceStats {
  int cany_iterations = 0;
  int profiles = 0;
  int candidates = 0;
  long wall_ms = 0;
};

struct ReduceResult {
  std::vector<ReductionSolution> solutions;
  std::vector<IIFResult> iif;
  ReduceStats stats;
  bool timed_out = false;
  /// Some parameter reduction or polynomial solve hit its caps.
  bool inconclusive = false;
};

/// Solves sum g_i A^i B^(n-i) = M*c + t*(B*A_x - A*B_x)*B^(n-2) for
/// x-only rational g_i and returns f_i = g_i / t, the coefficients of
/// y' = sum f_i y^i. nullopt when no such f exists.
std::optional<std::vector<RatFunc>> solve_f(const BiPoly& M, const BiPoly& A, const BiPoly& B, const BiPoly& c,
                                            const BiPoly& t, int n);

/// Both transformation identities hold exactly, gcd(A, B) = 1, c | A and
/// the top coefficient of the reduced ODE is nonzero.
bool verify_solution(const InputODE& ode, const ReductionSolution& sol);

/// The search over canceled-factor degrees 0..degreeA-1.
ReduceResult reduce(const InputODE& ode, int degreeA, const ReduceOptions& opts = {});

}  // namespace abelred
