#pragma once

#include "modcurve/arith.hpp"
#include "modcurve/exact/charpoly.hpp"
#include "modcurve/exact/power_sums.hpp"
#include "modcurve/modsym/hecke.hpp"
#include "modcurve/modsym/symbol_space.hpp"

#include <stdexcept>
#include <string>

namespace modcurve::geometry {

using exact::BigInt;
using exact::IntPolynomial;

/// Frobenius polynomial of X_0(N) mod p, prod (x^2 - a_i x + p) over the g
/// Hecke eigenvalues a_i of T_p. Built from chi(y) = prod (y - a_i) by
/// R(x) = sum_k c_k (x^2 + p)^k x^(g - k).
inline IntPolynomial frobenius_polynomial(Int n, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("frobenius_polynomial: p must be prime");
  if (n % p == 0) throw std::invalid_argument("frobenius_polynomial: p divides N (bad reduction)");
  modsym::SymbolSpace s(n);
  auto cusp = modsym::cuspidal_subspace(s);
  if (cusp.cols() == 0) return IntPolynomial::constant(1);
  auto t = exact::restrict_to(modsym::hecke_operator(s, p).matrix, cusp);
  // charpoly on the symbols is the square of the one on S_2
  auto full = exact::integer_char_poly(t);
  const int g = static_cast<int>(cusp.cols() / 2);
  std::vector<BigInt> sums = exact::power_sums_from_charpoly(full, static_cast<unsigned>(g));
  for (auto& v : sums) {
    if (v % 2 != 0) throw std::logic_error("Hecke trace on symbols is odd");
    v /= 2;
  }
  auto e = exact::elementary_from_power_sums(sums);
  IntPolynomial chi;
  {
    std::vector<BigInt> c(static_cast<std::size_t>(g) + 1);
    for (int k = 0; k <= g; ++k) {
      if (!exact::is_integer(e[static_cast<std::size_t>(k)])) throw std::logic_error("Hecke polynomial is not integral");
      BigInt v = e[static_cast<std::size_t>(k)].get_num();
      c[static_cast<std::size_t>(g - k)] = k % 2 ? BigInt(-v) : v;
    }
    chi = IntPolynomial(std::move(c));
  }
  IntPolynomial quad({BigInt(p), BigInt(0), BigInt(1)});
  IntPolynomial r;
  for (int k = 0; k <= g; ++k)
    r += IntPolynomial::constant(chi.coeff(static_cast<std::size_t>(k))) * quad.pow(static_cast<unsigned>(k)) *
         IntPolynomial::monomial(BigInt(1), static_cast<std::size_t>(g - k));
  return r;
}

/// #X_0(N)(F_{p^r}) = p^r + 1 - sum_i alpha_i^r over the 2g Frobenius roots.
inline BigInt point_count(Int n, Int p, Int r) {
  if (r < 1) throw std::invalid_argument("point_count: r must be at least 1");
  IntPolynomial frob = frobenius_polynomial(n, p);
  BigInt q = exact::pow(BigInt(p), static_cast<unsigned long>(r));
  if (frob.degree() == 0) return q + 1;
  auto s = exact::power_sums_from_charpoly(frob, static_cast<unsigned>(r));
  return q + 1 - s.back();
}

/// Exact test of x > (1 + sqrt(q))^2, i.e. x - 1 - q > 0 and (x - 1 - q)^2 > 4q.
inline bool exceeds_weil_square(const BigInt& x, const BigInt& q) {
  BigInt slack = x - 1 - q;
  return slack > 0 && slack * slack > 4 * q;
}

struct WeilReport {
  Int level = 0;
  Int prime = 0;
  int residue_degree = 0;
  Int tested_value = 0;    // N for f = 3, the prime-to-p part N' for f = 1
  BigInt q;                // p^f
  BigInt slack;            // tested_value - 1 - q
  BigInt slack_squared;
  BigInt four_q;
  bool inequality = false;  // tested_value > (1 + sqrt(q))^2
  bool ramification = true;  // e = 1 < p - 1, only constrained for f = 3
  bool no_additive = false;  // N > 4
  bool pass = false;
  std::string summary;
};

inline WeilReport weil_admissibility(Int n, Int p, int f) {
  if (f != 1 && f != 3) throw std::invalid_argument("weil_admissibility: residue degree must be 1 or 3");
  if (!is_prime(p)) throw std::invalid_argument("weil_admissibility: p must be prime");
  if (n < 1) throw std::invalid_argument("weil_admissibility: N must be positive");
  WeilReport w;
  w.level = n;
  w.prime = p;
  w.residue_degree = f;
  if (f == 1) {
    if (n % p != 0) throw std::invalid_argument("weil_admissibility: the N' branch needs p | N");
    Int m = n;
    while (m % p == 0) m /= p;
    w.tested_value = m;
  } else {
    w.tested_value = n;
    w.ramification = 1 < p - 1;
  }
  w.q = exact::pow(BigInt(p), static_cast<unsigned long>(f));
  w.slack = BigInt(w.tested_value) - 1 - w.q;
  w.slack_squared = w.slack * w.slack;
  w.four_q = 4 * w.q;
  w.inequality = exceeds_weil_square(BigInt(w.tested_value), w.q);
  w.no_additive = n > 4;
  w.pass = w.inequality && w.ramification;
  const std::string x = std::to_string(w.tested_value), q = w.q.get_str();
  w.summary = x + (w.inequality ? " > " : " <= ") + "(1+sqrt(" + q + "))^2: " + x + " - 1 - " + q + " = " +
              w.slack.get_str() + ", squared " + w.slack_squared.get_str() + " vs 4*" + q + " = " + w.four_q.get_str();
  return w;
}

}  // namespace modcurve::geometry
