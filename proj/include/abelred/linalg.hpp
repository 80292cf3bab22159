#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelred/bipoly.hpp"
#include "abelred/upoly.hpp"

namespace abelred {

/// Linear forms over named unknowns. Homogeneous unless rhs is set.
class LinSystem {
 public:
  using Row = std::vector<std::pair<std::size_t, Rat>>;  // (column, coefficient), no zeros

  LinSystem() = default;
  explicit LinSystem(std::vector<std::string> unknowns) : unknowns_(std::move(unknowns)) {}

  std::size_t add_unknown(std::string name);
  /// Adds sum(coef * unknown) = rhs; repeated columns are summed. Throws
  /// std::out_of_range on an undeclared column.
  void add_row(Row row, const Rat& rhs = 0);

  const std::vector<std::string>& unknowns() const { return unknowns_; }
  std::size_t num_unknowns() const { return unknowns_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Rat>& rhs() const { return rhs_; }
  bool homogeneous() const { return homogeneous_; }

 private:
  std::vector<std::string> unknowns_;
  std::vector<Row> rows_;
  std::vector<Rat> rhs_;
  bool homogeneous_ = true;
};

struct SolutionSpace {
  bool consistent = true;
  /// Solution of the inhomogeneous system with all free unknowns zero.
  std::optional<std::vector<Rat>> particular;
  /// Nullspace basis. Vector k has a 1 in the k-th free column and 0 in the
  /// other free columns; entries are scaled to coprime integers.
  std::vector<std::vector<Rat>> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Full solution set, by exact fraction-free elimination. A modular rank
/// computation decides the common cases of full column rank cheaply.
SolutionSpace solve_linear(const LinSystem& sys);

/// Nullspace of the homogeneous part (rhs ignored).
SolutionSpace nullspace(const LinSystem& sys);

/// True when vector v satisfies every row exactly.
bool satisfies(const LinSystem& sys, const std::vector<Rat>& v);

/// Find c with sum_i c_i * columns[i] = target over Q(x); entries are
/// polynomials in x only. Returns nullopt when inconsistent. Free
/// unknowns are set to zero.
std::optional<std::vector<RatFunc>> solve_over_rf(const std::vector<std::vector<UPoly>>& columns,
                                                  const std::vector<UPoly>& target);

}  // namespace abelred
