#pragma once

// Arbitrary precision integers and rationals.
//
// Both are thin names over GMP's C++ classes. mpz_class keeps a canonical
// sign/magnitude form and mpq_class is kept canonical (reduced, positive
// denominator) by every arithmetic operator; the one place this is not
// automatic is construction from a raw numerator/denominator pair, which
// goes through make_rational() below.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modcurve::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Floor of the square root of a non-negative integer.
inline BigInt isqrt(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Symmetric residue in (-m/2, m/2].
inline BigInt symmetric_mod(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

// Residue in [0, m) of an integer, for m fitting in 64 bits.
inline std::int64_t mod_small(const BigInt& v, std::int64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
  return static_cast<std::int64_t>(r.get_ui());
}

inline std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return v.get_si();
}

}  // namespace modcurve::exact
