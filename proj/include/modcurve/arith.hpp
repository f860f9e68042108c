#pragma once

// Small-integer number theory shared by every module. Levels, primes and
// cusp data all fit comfortably in 64 bits.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modcurve {

using Int = std::int64_t;

inline Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

/// Returns g = gcd(a, b) and x, y with a*x + b*y = g.
inline Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    a = std::exchange(b, a - q * b);
    x0 = std::exchange(x1, x0 - q * x1);
    y0 = std::exchange(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

inline Int inverse_mod(Int a, Int n) {
  Int x, y;
  if (ext_gcd(mod(a, n), n, x, y) != 1) throw std::domain_error("no inverse modulo n");
  return mod(x, n);
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent), primes ascending.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize needs a positive integer");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_squarefree(Int n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

inline Int euler_phi(Int n) {
  Int r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline Int num_divisors(Int n) {
  Int r = 1;
  for (auto [p, e] : factorize(n)) r *= e + 1;
  return r;
}

/// Index of Gamma_0(N) in SL_2(Z): N * prod_{p | N} (1 + 1/p).
inline Int gamma0_index(Int n) {
  Int r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p + 1);
  return r;
}

inline std::vector<Int> primes_up_to(Int bound) {
  std::vector<Int> out;
  for (Int p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace modcurve
