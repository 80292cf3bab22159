#pragma once

#include <optional>
#include <vector>

#include "abelred/bipoly.hpp"
#include "abelred/linalg.hpp"

namespace abelred {

/// Unknown layout: the A coefficients come first, then the c coefficients.
struct AnsatzSpec {
  std::vector<Monomial> A_monomials;  // i + j <= degreeA
  std::vector<Monomial> c_monomials;  // i <= degreeA - 1, j <= cany

  static AnsatzSpec dense(int degreeA, int cany);
};

/// Rows are the coefficients of N*c - t*(B*A_y - A*B_y)*B^(n-2).
LinSystem assemble_cancel_system(const BiPoly& N, const BiPoly& B, const BiPoly& t, int n, const AnsatzSpec& spec);

/// Solutions of the cancel identity: A = sum lambda_k A[k] + sum z_i free_A[i],
/// c = sum lambda_k c[k]. The c[k] are linearly independent. The free_A
/// directions h(x)*B leave c unchanged; they are kept apart so that the
/// linear solve sees only the part of the kernel that determines c.
struct CancelFamily {
  std::vector<BiPoly> A;
  std::vector<BiPoly> c;
  std::vector<BiPoly> free_A;

  std::size_t dimension() const { return c.size(); }
};

CancelFamily solve_cancel_family(const BiPoly& N, const BiPoly& B, const BiPoly& t, int n, int degreeA, int cany);

struct CancelSolution {
  BiPoly A;
  BiPoly c;
  /// Parameters left free after reduction; their values were sampled.
  int parameters_remaining = 0;
};

struct ReduceOutcome {
  std::vector<CancelSolution> solutions;
  /// Some case exceeded the solver caps and was skipped.
  bool inconclusive = false;
};

/// Imposes c | A on a family. Cases are indexed by the leading monomial of
/// c in the given order; c is scaled so that its leading coefficient is 1
/// and the remainder of A modulo c must vanish. Surviving points are kept
/// when A != 0, exact_div(A, c) succeeds, gcd(A, B) = 1 and deg_y c = cany.
ReduceOutcome reduce_parameters(const CancelFamily& family, const BiPoly& B, int cany, MonomialOrder order);

/// Tries TdegYX and falls back to TdegXY when nothing survives.
ReduceOutcome reduce_parameters(const CancelFamily& family, const BiPoly& B, int cany);

/// A = P^k with c = lambda * P^(k-1): solves
/// t*(k*B*P_y - P*B_y)*B^(n-2) = lambda*N with total degree of P at most
/// degreeA / k. Requires a one-dimensional solution space and gcd(P, B) = 1.
std::optional<CancelSolution> power_case_solve(const BiPoly& N, const BiPoly& B, const BiPoly& t, int n, int k,
                                               int degreeA);

/// N*c == t*(B*A_y - A*B_y)*B^(n-2) exactly.
bool cancel_identity_holds(const BiPoly& N, const BiPoly& A, const BiPoly& c, const BiPoly& B, const BiPoly& t,
                           int n);

}  // namespace abelred
