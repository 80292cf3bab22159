#pragma once

#include <optional>
#include <vector>

#include "abelred/mpoly.hpp"

namespace abelred {

struct GroebnerLimits {
  int max_reductions = 2000;
  std::size_t max_unknowns = 12;
};

/// Reduced lex Groebner basis, or nullopt when the reduction cap is hit.
std::optional<std::vector<MPoly>> groebner_lex(std::vector<MPoly> gens, const GroebnerLimits& limits = {},
                                               int* reductions_used = nullptr);

struct PolySystemResult {
  /// Rational solution points, deduplicated, in lexicographic order.
  std::vector<std::vector<Rat>> solutions;
  /// Some component has irrational coordinates.
  bool nonrational = false;
  /// Some component is positive-dimensional; only integer sample points
  /// of it are reported.
  bool sampled = false;
  /// Step cap or unknown cap exceeded; solutions may be incomplete.
  bool inconclusive = false;
};

/// Rational solutions of a small polynomial system over Q.
PolySystemResult solve_poly_system_small(const std::vector<MPoly>& eqs, const GroebnerLimits& limits = {});

}  // namespace abelred
