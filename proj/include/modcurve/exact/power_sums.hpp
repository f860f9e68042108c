#pragma once

#include "modcurve/exact/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace modcurve::exact {

/// Power sums s_1..s_r of the roots of a monic integer polynomial, from
/// Newton's identities.
inline std::vector<BigInt> power_sums_from_charpoly(const IntPolynomial& p, unsigned r) {
  if (!p.is_monic()) throw std::invalid_argument("power sums need a monic polynomial");
  const int n = p.degree();
  // a[i] is the coefficient of x^(n-i)
  auto a = [&](int i) -> BigInt { return i > n ? BigInt(0) : p.coeff(static_cast<std::size_t>(n - i)); };
  std::vector<BigInt> s(r + 1);
  for (int k = 1; k <= static_cast<int>(r); ++k) {
    BigInt acc = 0;
    for (int i = 1; i < k && i <= n; ++i) acc += a(i) * s[static_cast<std::size_t>(k - i)];
    if (k <= n) acc += k * a(k);
    s[static_cast<std::size_t>(k)] = -acc;
  }
  s.erase(s.begin());
  return s;
}

/// Inverse direction: coefficients e_1..e_m (elementary symmetric
/// functions) from power sums s_1..s_m. Returns rationals; integrality is
/// a property of the caller's data.
inline std::vector<Rational> elementary_from_power_sums(const std::vector<BigInt>& s) {
  const std::size_t m = s.size();
  std::vector<Rational> e(m + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * Rational(s[i - 1]);
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return e;
}

}  // namespace modcurve::exact
