#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelred/bipoly.hpp"
#include "abelred/linalg.hpp"

namespace abelred {

/// Degree limits for the auxiliary system; negative means the default
/// deg M1 <= deg M, deg N1 <= deg N, deg tau <= max(deg M, deg N) + 1.
struct IIFBounds {
  int deg_M1 = -1;
  int deg_N1 = -1;
  int deg_tau = -1;
  /// Largest degree tried for the exponent derivative g; negative means
  /// max(deg M, deg N).
  int deg_g = -1;
};

/// mu = exp(integral of g dx) * prod p_i^alpha_i, an inverse integrating
/// factor of y' = M/N: N*mu_x + M*mu_y = (M_y + N_x)*mu.
struct IIFResult {
  BiPoly exp_part;  // g, x only
  std::vector<std::pair<BiPoly, int>> darboux;

  /// Antiderivative of g without constant term.
  UPoly exponent() const;
  /// e.g. "(x*y + 2)^3*(y + x + 1)^4*exp(1/3*x^3 + x)"
  std::string to_string() const;
};

/// Candidate (M1, N1, tau) for the fundamental equation.
struct AuxiliarySystem {
  BiPoly M1, N1, tau;
};

/// Unknowns: coefficients of M1 (total degree <= degM1), then N1, then tau.
/// Rows: coefficients of M*N1 - M1*N - (M_y + N_x)*tau.
LinSystem assemble_fundamental(const BiPoly& M, const BiPoly& N, int degM1, int degN1, int degTau);

/// M1*tau_y + N1*tau_x == tau*(M1_y + N1_x).
bool auxiliary_iif_holds(const AuxiliarySystem& aux);

/// Solves for nonnegative integer alpha_i and g of degree <= degG with
/// N*(g + sum alpha_i p_i,x/p_i) + M*(sum alpha_i p_i,y/p_i) = M_y + N_x.
/// Smaller degrees of g are tried first, starting from g = 0.
std::optional<IIFResult> liouvillian_from_basis(const BiPoly& M, const BiPoly& N, const std::vector<BiPoly>& basis,
                                                int degG);

/// Exact check of the defining identity, independent of how mu was found.
bool verify_iif(const BiPoly& M, const BiPoly& N, const IIFResult& r);

struct IIFSearch {
  /// Results with Darboux factors come first.
  std::vector<IIFResult> results;
  bool inconclusive = false;
  /// Uniform degree bound at which the results were found, or -1.
  int degree_used = -1;
};

/// Raises a uniform degree bound D on (M1, N1, tau) from 0 up to the limits.
/// For each D: solve the fundamental equation linearly, impose the
/// inverse integrating factor condition on the family, take the Darboux
/// candidates from the factors of tau and of N and call
/// liouvillian_from_basis. Stops at the first D that yields a result with
/// Darboux factors, or at the limits.
IIFSearch iif_search_n2(const BiPoly& M, const BiPoly& N, const IIFBounds& bounds = {});

}  // namespace abelred
