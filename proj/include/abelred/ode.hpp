#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelred/bipoly.hpp"
#include "abelred/upoly.hpp"

namespace abelred {

/// y' = M/N with gcd(M, N) = 1, integer coefficients without common
/// content and positive leading coefficient of N.
struct InputODE {
  BiPoly M;
  BiPoly N;
};

/// Normalizes (M, N) as described on InputODE. Throws std::invalid_argument
/// when N is zero.
InputODE make_input_ode(const BiPoly& M, const BiPoly& N);

/// t(x) * y' = sum_i coeffs[i](x) * y^i
struct ReducedODE {
  BiPoly t;
  std::vector<BiPoly> coeffs;

  int n() const { return static_cast<int>(coeffs.size()) - 1; }
  /// e.g. "x*y' = x*y^3 + (-x - 1)*y^2"
  std::string to_string() const;
};

bool operator==(const ReducedODE& a, const ReducedODE& b);

/// The ODE y' = (sum coeffs[i] y^i) / t as a numerator/denominator pair.
InputODE as_input_ode(const ReducedODE& r);

/// Removes common x-only factors of t and all coefficients, then scales to
/// integer coefficients without common content and a positive leading
/// coefficient of t.
ReducedODE normalize_reduced(const ReducedODE& r);

/// y' = sum f[i] y^i written as t*y' = sum coeffs[i] y^i with t the lcm of
/// the denominators, normalized.
ReducedODE reduced_from_rational(const std::vector<RatFunc>& f);

/// lambda such that substituting y -> lambda*y into `to` gives `from`,
/// i.e. from.coeffs[i]/from.t == lambda^(i-1) * to.coeffs[i]/to.t.
std::optional<Rat> gauge_between(const ReducedODE& from, const ReducedODE& to);

}  // namespace abelred
