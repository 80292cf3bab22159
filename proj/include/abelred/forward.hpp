#pragma once

#include <cstdint>
#include <string>

#include "abelred/bipoly.hpp"
#include "abelred/ode.hpp"

namespace abelred {

/// An input ODE built by applying y -> A/B to a known base equation.
struct Fixture {
  ReducedODE base;
  BiPoly A, B;
  InputODE ode;
  /// y-dependent part of the canceled gcd, normalized; 1 if nothing in y cancels.
  BiPoly expected_c;
  /// x-only part of the canceled gcd, normalized.
  BiPoly canceled_x;
};

/// Raw numerator sum f_i A^i B^(n-i) - t*(B*A_x - A*B_x)*B^(n-2) and
/// denominator t*(B*A_y - A*B_y)*B^(n-2), divided by their gcd.
/// Throws std::invalid_argument when gcd(A, B) is not constant, when A and
/// B are both constant or when A/B does not depend on y.
Fixture forward_transform(const ReducedODE& base, const BiPoly& A, const BiPoly& B);

struct FixtureLimits {
  int max_deg_A = 4;  // total degree; deg_y A <= this as well
  int max_deg_B = 2;
  int max_n = 5;
  int height = 5;  // coefficients drawn from [-height, height]
  /// f_0 = 0 and a squared factor in A, so that part of A cancels.
  bool force_cancellation = false;
};

/// Deterministic per (seed, limits). Throws std::invalid_argument for
/// max_deg_A < 1 (or < 2 with forced cancellation), max_deg_B < 1,
/// max_n < 3 or height < 1.
Fixture random_fixture(std::uint64_t seed, const FixtureLimits& limits);

/// Text accepted by parse_ode, with the base equation and A, B as comments.
std::string fixture_to_text(const Fixture& f);

}  // namespace abelred
