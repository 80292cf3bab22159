#pragma once

// Heuristic gcd by integer evaluation (GCDHEU). Internal to the kernel.

#include <optional>
#include <vector>

#include "abelred/bipoly.hpp"

namespace abelred::detail {

using IntPoly = std::vector<Int>;  // ascending coefficients, no trailing zeros

IntPoly trim(IntPoly p);
Int content(const IntPoly& p);
Int max_norm(const IntPoly& p);
Int eval(const IntPoly& p, const Int& at);
/// Symmetric base-xi digits of v.
IntPoly xi_adic(Int v, const Int& xi);
bool divides(const IntPoly& d, const IntPoly& p);

/// gcd over Z[y] including integer content; nullopt when the heuristic
/// gives up.
std::optional<IntPoly> heu_gcd_uni(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Z[x, y] of two integer-coefficient polynomials,
/// or nullopt when the heuristic gives up.
std::optional<BiPoly> heu_gcd_bi(const BiPoly& a, const BiPoly& b);

/// Integer polynomial times rational scale s with p = s * q exactly.
std::pair<IntPoly, Rat> to_int_poly(const UPoly& p);
UPoly to_upoly(const IntPoly& p);

}  // namespace abelred::detail
