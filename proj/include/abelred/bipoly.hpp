#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "abelred/rational.hpp"
#include "abelred/upoly.hpp"

namespace abelred {

/// x^x * y^y
struct Monomial {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  bool divides(const Monomial& o) const { return x <= o.x && y <= o.y; }
  friend Monomial operator*(Monomial a, Monomial b) { return {a.x + b.x, a.y + b.y}; }
  friend Monomial operator/(Monomial a, Monomial b) { return {a.x - b.x, a.y - b.y}; }
  // Storage order: y-major, then x. Not a monomial order used for division.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class MonomialOrder {
  TdegYX,  // total degree, ties broken by the larger y-exponent
  TdegXY,  // total degree, ties broken by the larger x-exponent
};

/// True when a is strictly greater than b in the given order.
bool greater(const Monomial& a, const Monomial& b, MonomialOrder order);

enum class Var { X, Y };

/// Sparse bivariate polynomial in x, y over the rationals.
///
/// Terms are kept sorted by the storage order of Monomial with no zero
/// coefficients, so structural equality is polynomial equality.
class BiPoly {
 public:
  struct Term {
    Monomial mono;
    Rat coef;
  };

  BiPoly() = default;
  BiPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(long constant) : BiPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(Monomial m, const Rat& coef = 1);
  /// Combines duplicate monomials and drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  /// Embed a univariate polynomial in the given variable.
  static BiPoly from_upoly(const UPoly& p, Var var);
  /// Build sum_j coeffs[j](x) * y^j.
  static BiPoly from_y_coeffs(const std::vector<UPoly>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool depends_on(Var v) const { return v == Var::X ? deg_x() > 0 : deg_y() > 0; }
  /// -1 for the zero polynomial.
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;
  Rat coeff(Monomial m) const;
  Rat constant_term() const { return coeff({0, 0}); }

  Term leading_term(MonomialOrder order = MonomialOrder::TdegYX) const;
  Rat leading_coeff(MonomialOrder order = MonomialOrder::TdegYX) const {
    return leading_term(order).coef;
  }

  /// Coefficient of y^j as a polynomial in x.
  UPoly y_coeff(int j) const;
  /// All y-coefficients, index j holds the coefficient of y^j.
  std::vector<UPoly> y_coeffs() const;
  /// Only valid when the polynomial does not depend on y (resp. x).
  UPoly as_upoly(Var var) const;

  Rat eval(const Rat& x0, const Rat& y0) const;
  /// Substitute x := x0, leaving a polynomial in y.
  BiPoly subs_x(const Rat& x0) const;
  /// p(x + shift, y)
  BiPoly shift_x(const Rat& shift) const;

  BiPoly derive(Var v) const;
  BiPoly scaled(const Rat& s) const;
  /// Multiply by a monomial.
  BiPoly shifted(Monomial m) const;
  BiPoly pow(unsigned e) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a) { return a.scaled(-1); }
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  /// Canonical text form, terms in descending TdegYX order, e.g.
  /// "y^4 + 2*x*y^3 - 3/2*x + 1". The parser reads it back.
  std::string to_string() const;

 private:
  explicit BiPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

enum class ArithKind { Add, Sub, Mul };
BiPoly arith(const BiPoly& a, const BiPoly& b, ArithKind kind);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

inline BiPoly derive(const BiPoly& p, Var v) { return p.derive(v); }

}  // namespace abelred
