#pragma once

// Univariate polynomial arithmetic over Z/pZ for word-size primes p < 2^31.

#include <cstdint>
#include <random>
#include <vector>

#include "abelred/rational.hpp"

namespace abelred::detail {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;  // ascending, trimmed

class ModP {
 public:
  explicit ModP(u64 p) : p_(p) {}
  u64 p() const { return p_; }

  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 reduce(const Int& v) const;

  PolyP trim(PolyP a) const;
  PolyP add(const PolyP& a, const PolyP& b) const;
  PolyP sub(const PolyP& a, const PolyP& b) const;
  PolyP mul(const PolyP& a, const PolyP& b) const;
  PolyP scale(const PolyP& a, u64 s) const;
  void divmod(const PolyP& a, const PolyP& b, PolyP* q, PolyP* r) const;
  PolyP rem(const PolyP& a, const PolyP& b) const;
  PolyP quo(const PolyP& a, const PolyP& b) const;
  PolyP monic(const PolyP& a) const;
  PolyP gcd(PolyP a, PolyP b) const;
  /// s*a + t*b = gcd (monic)
  PolyP ext_gcd(const PolyP& a, const PolyP& b, PolyP* s, PolyP* t) const;
  PolyP derivative(const PolyP& a) const;
  /// base^e mod m for a big exponent.
  PolyP powmod(const PolyP& base, const Int& e, const PolyP& m) const;

  /// Factor a monic square-free polynomial into monic irreducibles.
  std::vector<PolyP> factor_squarefree(const PolyP& f, std::mt19937_64& rng) const;

 private:
  std::vector<PolyP> equal_degree(const PolyP& f, int d, std::mt19937_64& rng) const;
  u64 p_;
};

inline int degree(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace abelred::detail
