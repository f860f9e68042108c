#pragma once

// Order of the rational cuspidal subgroup of J_0(N) for square-free N:
//
//   h0(N) = (2^f * 12 * a2 * a3 / gcd12) * prod_{chi != 1} (1/24) prod_{p | N} (p + chi(p))
//
// where chi runs over the nontrivial sign characters of the 2-group of
// positive divisors of N, gcd12 = gcd(12, p_1 - 1, ..., p_f - 1),
// a2 = 2 iff 2 | N and some p = 3 mod 4, a3 = 3 iff 3 | N and some p = 2 mod 3.

#include "modcurve/arith.hpp"
#include "modcurve/exact/bigint.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace modcurve::cuspidal {

using exact::BigInt;
using exact::Rational;

struct OrderParameters {
  std::vector<Int> primes;
  int f = 0;
  Int gcd12 = 0;
  int a2 = 1;
  int a3 = 1;
};

/// Sign vector, one entry per prime of N in ascending order.
struct CharacterOnT {
  std::vector<int> signs;
  bool trivial() const {
    for (int s : signs)
      if (s != 1) return false;
    return true;
  }
};

struct CuspidalOrder {
  Int level = 0;
  BigInt value;
  std::vector<std::pair<BigInt, int>> factored;
  OrderParameters parameters;
};

inline OrderParameters order_parameters(Int n) {
  if (n <= 1) throw std::invalid_argument("order_parameters: N must exceed 1");
  if (!is_squarefree(n)) throw std::invalid_argument("order_parameters: N must be square-free");
  OrderParameters t;
  t.primes = prime_divisors(n);
  t.f = static_cast<int>(t.primes.size());
  t.gcd12 = 12;
  bool has_3_mod_4 = false, has_2_mod_3 = false;
  for (Int p : t.primes) {
    t.gcd12 = gcd(t.gcd12, p - 1);
    has_3_mod_4 = has_3_mod_4 || p % 4 == 3;
    has_2_mod_3 = has_2_mod_3 || p % 3 == 2;
  }
  t.a2 = (n % 2 == 0 && has_3_mod_4) ? 2 : 1;
  t.a3 = (n % 3 == 0 && has_2_mod_3) ? 3 : 1;
  return t;
}

/// (1/24) * prod_{p | N} (p + chi(p)) for a nontrivial character.
inline Rational character_term(const CharacterOnT& chi, Int n) {
  if (chi.trivial()) throw std::invalid_argument("character_term: trivial character");
  auto primes = prime_divisors(n);
  if (primes.size() != chi.signs.size()) throw std::invalid_argument("character_term: sign vector length mismatch");
  BigInt prod = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (chi.signs[i] != 1 && chi.signs[i] != -1) throw std::invalid_argument("character_term: signs must be +-1");
    prod *= primes[i] + chi.signs[i];
  }
  return exact::make_rational(prod, 24);
}

/// All 2^f - 1 nontrivial characters; bit i of the mask flips prime i.
inline std::vector<CharacterOnT> nontrivial_characters(int f) {
  std::vector<CharacterOnT> out;
  for (unsigned mask = 1; mask < (1u << f); ++mask) {
    CharacterOnT chi;
    for (int i = 0; i < f; ++i) chi.signs.push_back((mask >> i) & 1u ? -1 : 1);
    out.push_back(std::move(chi));
  }
  return out;
}

inline std::vector<std::pair<BigInt, int>> factor_integer(BigInt v) {
  std::vector<std::pair<BigInt, int>> out;
  for (BigInt p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

inline CuspidalOrder h0(Int n) {
  CuspidalOrder out;
  out.level = n;
  out.parameters = order_parameters(n);
  const auto& t = out.parameters;
  Rational value = Rational(BigInt(1) << t.f) * 12 * t.a2 * t.a3 / Rational(t.gcd12);
  for (const auto& chi : nontrivial_characters(t.f)) value *= character_term(chi, n);
  if (!exact::is_integer(value) || value < 1) throw std::logic_error("cuspidal order is not a positive integer");
  out.value = value.get_num();
  out.factored = factor_integer(out.value);
  return out;
}

/// "2^3*7" style rendering.
inline std::string factored_string(const std::vector<std::pair<BigInt, int>>& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : f) {
    if (!s.empty()) s += "*";
    s += p.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace modcurve::cuspidal
