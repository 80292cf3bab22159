#pragma once

#include <utility>
#include <vector>

#include "abelred/bipoly.hpp"

namespace abelred {

struct Factor {
  BiPoly poly;
  int multiplicity = 1;
};

/// Irreducible factorization over Q, split by whether a factor depends on y.
///
/// input == content * prod(units_x[i]^m) * prod(factors_y[i]^m). Every factor
/// is primitive with integer coefficients and positive leading coefficient.
struct FactorSet {
  Rat content = 1;
  std::vector<Factor> units_x;
  std::vector<Factor> factors_y;

  /// Product of the x-only factors with multiplicity (content excluded).
  BiPoly x_part() const;
  int max_y_multiplicity() const;
};

/// Square-free decomposition, parts pairwise coprime, ordered by decreasing
/// multiplicity. Throws std::invalid_argument on zero input.
std::vector<Factor> squarefree_decompose(const BiPoly& p);

/// Complete factorization over Q. Throws std::invalid_argument on zero input.
FactorSet factorize(const BiPoly& p);

struct UFactorization {
  Rat content = 1;
  std::vector<std::pair<UPoly, int>> factors;  // primitive integer factors
};

/// Univariate factorization over Q.
UFactorization factor_univariate(const UPoly& p);

struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;
  /// Irreducible factors of degree >= 2, with multiplicity.
  std::vector<std::pair<UPoly, int>> other_factors;
};

/// Rational roots of a nonconstant polynomial in x only.
RationalRoots roots_rational(const BiPoly& u);
RationalRoots roots_rational(const UPoly& u);

}  // namespace abelred
