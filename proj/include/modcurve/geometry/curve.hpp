#pragma once

#include "modcurve/arith.hpp"

#include <stdexcept>
#include <vector>

namespace modcurve::geometry {

struct CurveData {
  Int level = 0;
  Int index = 0;  // mu
  Int nu2 = 0;
  Int nu3 = 0;
  Int cusps = 0;
  Int genus = 0;
};

namespace detail {

// (-1 | p) and (-3 | p) as they enter the elliptic point counts
inline int kronecker_minus1(Int p) { return p == 2 ? 0 : (p % 4 == 1 ? 1 : -1); }
inline int kronecker_minus3(Int p) { return p == 3 ? 0 : (p % 3 == 1 ? 1 : -1); }

}  // namespace detail

inline Int cusp_count(Int n) {
  Int total = 0;
  for (Int d : divisors(n)) total += euler_phi(gcd(d, n / d));
  return total;
}

inline CurveData curve_data(Int n) {
  if (n < 1) throw std::invalid_argument("curve_data: N must be positive");
  CurveData c;
  c.level = n;
  c.index = gamma0_index(n);
  c.nu2 = 0;
  if (n % 4 != 0) {
    c.nu2 = 1;
    for (Int p : prime_divisors(n)) c.nu2 *= 1 + detail::kronecker_minus1(p);
  }
  c.nu3 = 0;
  if (n % 9 != 0) {
    c.nu3 = 1;
    for (Int p : prime_divisors(n)) c.nu3 *= 1 + detail::kronecker_minus3(p);
  }
  c.cusps = cusp_count(n);
  Int twelve_g = 12 + c.index - 3 * c.nu2 - 4 * c.nu3 - 6 * c.cusps;
  if (twelve_g < 0 || twelve_g % 12 != 0) throw std::logic_error("genus formula did not give a non-negative integer");
  c.genus = twelve_g / 12;
  return c;
}

inline Int genus(Int n) { return curve_data(n).genus; }

struct CuspClass {
  Int numerator = 0;    // a with gcd(a, d) = 1
  Int denominator = 0;  // d | N
  Int width = 0;
  Int field_degree = 1;  // over Q, inside Q(zeta_N)
};

struct CuspGroup {
  Int denominator = 0;
  std::vector<CuspClass> cusps;
};

struct CuspSet {
  Int level = 0;
  std::vector<CuspGroup> groups;  // ascending d

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.cusps.size();
    return n;
  }
  std::size_t rational_count() const {
    std::size_t n = 0;
    for (const auto& g : groups)
      for (const auto& c : g.cusps) n += c.field_degree == 1;
    return n;
  }
};

/// Cusps a/d of X_0(N): for each d | N one class per unit a mod gcd(d, N/d).
/// The classes of denominator d form one Galois orbit over Q(zeta_gcd(d, N/d)).
inline CuspSet cusps(Int n) {
  if (n < 1) throw std::invalid_argument("cusps: N must be positive");
  CuspSet out;
  out.level = n;
  for (Int d : divisors(n)) {
    const Int g = gcd(d, n / d);
    CuspGroup group;
    group.denominator = d;
    for (Int a = 1; a <= g; ++a) {
      if (gcd(a, g) != 1) continue;
      Int rep = a;
      while (gcd(rep, d) != 1) rep += g;
      group.cusps.push_back({rep, d, n / gcd(d * d, n), euler_phi(g)});
    }
    out.groups.push_back(std::move(group));
  }
  return out;
}

}  // namespace modcurve::geometry
