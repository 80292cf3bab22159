#pragma once

#include <gmpxx.h>

#include <string>

namespace abelred {

/// Exact rational number. mpq_class keeps numerator/denominator reduced
/// with a positive denominator as long as every mutation is followed by
/// canonicalize(), which the gmpxx operators already do.
using Rat = mpq_class;
using Int = mpz_class;

/// n/d in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize).
inline Rat make_rat(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

inline Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Int gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline std::size_t bit_size(const Int& a) {
  return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

}  // namespace abelred
