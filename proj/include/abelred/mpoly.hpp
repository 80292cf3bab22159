#pragma once

#include <map>
#include <string>
#include <vector>

#include "abelred/rational.hpp"
#include "abelred/upoly.hpp"

namespace abelred {

/// Exponent vector; all vectors inside one MPoly have the same length.
using Exponent = std::vector<int>;

/// Lexicographic order with variable 0 largest.
struct LexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

/// Sparse polynomial over Q in a fixed number of variables, terms kept in
/// descending lex order without zero coefficients.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rat, LexGreater>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const Rat& c);
  static MPoly var(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  int degree_in(std::size_t v) const;
  /// Variables with a positive exponent somewhere.
  std::vector<std::size_t> variables() const;
  /// Leading term in lex order; undefined on zero.
  const Exponent& leading_exp() const { return terms_.begin()->first; }
  const Rat& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Exponent& e, const Rat& c);
  MPoly scaled(const Rat& s) const;
  MPoly monic() const;
  /// Multiply by coefficient * monomial.
  MPoly mul_term(const Exponent& e, const Rat& c) const;
  /// Substitute variable v := value.
  MPoly subs(std::size_t v, const Rat& value) const;
  Rat eval(const std::vector<Rat>& point) const;
  /// Polynomial in variable v only; valid when no other variable occurs.
  UPoly as_univariate(std::size_t v) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a) { return a.scaled(-1); }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace abelred
