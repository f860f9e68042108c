#pragma once

#include "modcurve/exact/matrix.hpp"
#include "modcurve/exact/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace modcurve::exact {

namespace detail {

// Characteristic polynomial through reduction to upper Hessenberg form by
// exact similarity transforms, then the usual column recurrence.
inline RationalPolynomial hessenberg_charpoly(RationalMatrix h) {
  const std::size_t n = h.rows();
  Rational u, tmp;
  for (std::size_t m = 0; m + 2 < n; ++m) {
    std::size_t i = m + 1;
    while (i < n && h(i, m) == 0) ++i;
    if (i == n) continue;
    if (i != m + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m + 1, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m + 1));
    }
    const Rational inv = 1 / h(m + 1, m);
    for (std::size_t r = m + 2; r < n; ++r) {
      if (h(r, m) == 0) continue;
      u = h(r, m) * inv;
      for (std::size_t j = 0; j < n; ++j) {
        if (h(m + 1, j) == 0) continue;
        tmp = u * h(m + 1, j);
        h(r, j) -= tmp;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (h(j, r) == 0) continue;
        tmp = u * h(j, r);
        h(j, m + 1) += tmp;
      }
    }
  }

  std::vector<RationalPolynomial> p;
  p.reserve(n + 1);
  p.push_back(RationalPolynomial::constant(1));
  const RationalPolynomial x = RationalPolynomial::x();
  for (std::size_t m = 0; m < n; ++m) {
    RationalPolynomial next = (x - RationalPolynomial::constant(h(m, m))) * p[m];
    Rational prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod == 0) break;
      if (h(i, m) != 0) next -= p[i] * (prod * h(i, m));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

}  // namespace detail

/// Monic characteristic polynomial det(x I - m), computed exactly.
/// The matrix is first scaled to integer entries by the lcm of its
/// denominators and the result rescaled afterwards.
inline RationalPolynomial char_poly(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly of a non-square matrix");
  const std::size_t n = m.rows();
  BigInt den = 1;
  for (const auto& v : m.entries()) den = lcm(den, v.get_den());
  RationalMatrix scaled = m;
  if (den != 1) scaled *= Rational(den);
  RationalPolynomial scaled_poly = detail::hessenberg_charpoly(std::move(scaled));
  if (den == 1) return scaled_poly;
  // coefficient k of charpoly(B/D) is c_k(B) * D^(k-n)
  std::vector<Rational> c(n + 1);
  Rational d = Rational(den);
  Rational dpow = 1;  // D^(n-k) for k from n downward
  for (std::size_t k = n + 1; k-- > 0;) {
    c[k] = scaled_poly.coeff(k) / dpow;
    dpow *= d;
  }
  return RationalPolynomial(std::move(c));
}

/// Characteristic polynomial that must have integer coefficients.
inline IntPolynomial integer_char_poly(const RationalMatrix& m) {
  RationalPolynomial p = char_poly(m);
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) {
    if (!is_integer(v)) throw std::domain_error("characteristic polynomial is not integral");
    c.push_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace modcurve::exact
