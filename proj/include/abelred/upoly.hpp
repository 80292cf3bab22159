#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "abelred/rational.hpp"

namespace abelred {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending order of degree. The zero polynomial has no coefficients and
/// degree -1; the leading coefficient is never stored as zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(std::initializer_list<Rat> coeffs) : UPoly(std::vector<Rat>(coeffs)) {}
  UPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  UPoly(long constant) : UPoly(Rat(constant)) {}  // NOLINT

  static UPoly monomial(int degree, const Rat& coef = 1);
  /// x - a
  static UPoly linear_root(const Rat& a);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rat& leading() const { return coeffs_.back(); }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& at) const;
  UPoly derivative() const;
  UPoly scaled(const Rat& s) const;
  UPoly monic() const;
  /// p(x + shift)
  UPoly taylor_shift(const Rat& shift) const;
  UPoly pow(unsigned e) const;
  /// Multiply by x^k.
  UPoly shifted(int k) const;
  /// Truncate to terms of degree < n.
  UPoly truncated(int n) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a) { return a.scaled(-1); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);  // quotient
UPoly operator%(const UPoly& a, const UPoly& b);  // remainder

/// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly lcm(const UPoly& a, const UPoly& b);

struct ExtGcd {
  UPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

/// Integer content / primitive part: p = content * primitive with the
/// primitive part having coprime integer coefficients and positive leading
/// coefficient.
Rat content(const UPoly& p);
UPoly primitive(const UPoly& p);

/// Inverse of a modulo m (both over Q); throws std::domain_error if not
/// invertible.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

/// Power series inverse of a (a(0) != 0) modulo x^n.
UPoly series_inverse(const UPoly& a, int n);

/// Rational function over Q in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(UPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  UPoly num_, den_;
};

}  // namespace abelred
