#pragma once

#include <optional>
#include <vector>

#include "abelred/bipoly.hpp"

namespace abelred {

/// Canonical representative of p up to a nonzero rational scalar: integer
/// coefficients with gcd 1 and a positive leading coefficient under TdegYX.
BiPoly normalize(const BiPoly& p);

/// Returns (q, s) with q = s * p and q == normalize(p).
std::pair<BiPoly, Rat> normalize_with_scale(const BiPoly& p);

/// Greatest common divisor, normalized. gcd(a, 0) = normalize(a).
/// Throws std::invalid_argument when both inputs are zero.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// gcd via the primitive remainder sequence in y only (no heuristic).
BiPoly gcd_prs(const BiPoly& a, const BiPoly& b);

/// q with a == q * b, or nullopt when b does not divide a.
/// Throws std::domain_error when b is zero.
std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);

/// Content of p with respect to y (gcd of its y-coefficients), monic.
UPoly content_y(const BiPoly& p);

/// p divided by its y-content; normalized.
BiPoly primitive_y(const BiPoly& p);

struct DivisionResult {
  std::vector<BiPoly> quotients;
  BiPoly remainder;
};

/// Multivariate division: f = sum q_i d_i + r, no term of r divisible by
/// any leading term of a divisor. Divisors are tried in list order.
DivisionResult reduce_modulo(const BiPoly& f, const std::vector<BiPoly>& divisors, MonomialOrder order);

/// Reduce the x-dependence of p modulo a nonconstant polynomial in x.
/// For modulus x - a this is the substitution x := a.
BiPoly eval_at_x(const BiPoly& p, const UPoly& modulus);

/// Division in (Q[x]/(modulus))[y]: does b divide a? modulus must be
/// irreducible for the answer to be meaningful.
bool divides_mod(const BiPoly& b, const BiPoly& a, const UPoly& modulus);

}  // namespace abelred
