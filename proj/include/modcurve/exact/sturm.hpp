#pragma once

#include "modcurve/exact/polynomial.hpp"

#include <optional>
#include <vector>

namespace modcurve::exact {

namespace detail {

inline int sign(const Rational& v) { return sgn(v); }

inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-make_monic(r) * Rational(sgn(r.leading())));
  }
  return chain;
}

// Sign changes of the chain at x, or at +/- infinity when x is empty.
inline int variations(const std::vector<RationalPolynomial>& chain, const std::optional<Rational>& x, bool plus_inf) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s;
    if (x) {
      s = sign(q(*x));
    } else {
      s = sgn(q.leading());
      if (!plus_inf && q.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Square-free part p / gcd(p, p').
inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

/// Number of distinct real roots in (lower, upper]; an empty bound means infinity.
inline int count_real_roots(const RationalPolynomial& p, const std::optional<Rational>& lower,
                            const std::optional<Rational>& upper) {
  RationalPolynomial sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(sf);
  return detail::variations(chain, lower, false) - detail::variations(chain, upper, true);
}

/// True iff every real root x of p satisfies x^2 <= bound_sq. Works on the
/// polynomial in y = x^2 whose roots are the squares of the roots of p.
inline bool real_roots_within(const RationalPolynomial& p, const Rational& bound_sq) {
  RationalPolynomial neg;
  {
    std::vector<Rational> c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    neg = RationalPolynomial(std::move(c));
  }
  RationalPolynomial even = p * neg;
  std::vector<Rational> half;
  for (std::size_t i = 0; i < even.coefficients().size(); i += 2) half.push_back(even.coefficients()[i]);
  RationalPolynomial in_square(std::move(half));
  return count_real_roots(in_square, bound_sq, std::nullopt) == 0;
}

}  // namespace modcurve::exact
