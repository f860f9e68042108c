#pragma once

// Factorization of integer polynomials over Q (Zassenhaus):
// square-free decomposition, factorization modulo a small prime
// (distinct-degree then Cantor-Zassenhaus equal-degree splitting),
// multifactor Hensel lifting past a Mignotte-type coefficient bound, and
// recombination of lifted factors by subset trial division.

#include "modcurve/exact/bigint.hpp"
#include "modcurve/exact/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modcurve::exact {

struct Factorization {
  Rational unit;
  std::vector<std::pair<IntPolynomial, unsigned>> factors;

  /// unit * prod factor^exponent
  RationalPolynomial expand() const {
    RationalPolynomial r = RationalPolynomial::constant(unit);
    for (const auto& [f, e] : factors) r *= to_rational(f).pow(e);
    return r;
  }
};

namespace detail {

// ---- arithmetic in F_p[x]; coefficients in [0, p), lowest degree first ----

using ModPoly = std::vector<std::int64_t>;

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element is not invertible modulo p");
  return t < 0 ? t + p : t;
}

inline ModPoly mp_sub(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] + p) % p;
  trim(a);
  return a;
}

inline ModPoly mp_add(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline ModPoly mp_scale(ModPoly a, std::int64_t s, std::int64_t p) {
  for (auto& v : a) v = (v * s) % p;
  trim(a);
  return a;
}

inline std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  ModPoly rem = a;
  if (rem.size() < b.size()) return {{}, rem};
  ModPoly quo(rem.size() - b.size() + 1, 0);
  const std::int64_t inv = mod_inverse(b.back(), p);
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    std::int64_t q = rem[i] * inv % p;
    quo[i - (b.size() - 1)] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - (b.size() - 1) + j;
      rem[k] = ((rem[k] - q * b[j]) % p + p) % p;
    }
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

inline ModPoly mp_mod(const ModPoly& a, const ModPoly& b, std::int64_t p) { return mp_divmod(a, b, p).second; }

inline ModPoly mp_monic(const ModPoly& a, std::int64_t p) {
  if (a.empty()) return a;
  return mp_scale(a, mod_inverse(a.back(), p), p);
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

// s*a + t*b = gcd(a, b) (monic)
inline void mp_ext_gcd(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& g, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, mp_sub(s0, mp_mul(q, s1, p), p));
    t0 = std::exchange(t1, mp_sub(t0, mp_mul(q, t1, p), p));
  }
  std::int64_t inv = mod_inverse(r0.back(), p);
  g = mp_scale(r0, inv, p);
  s = mp_scale(s0, inv, p);
  t = mp_scale(t0, inv, p);
}

inline ModPoly mp_derivative(const ModPoly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
  trim(d);
  return d;
}

inline ModPoly mp_powmod(const ModPoly& base, const BigInt& e, const ModPoly& f, std::int64_t p) {
  ModPoly result{1};
  ModPoly b = mp_mod(base, f, p);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_mod(mp_mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_mod(mp_mul(result, b, p), f, p);
  }
  return result;
}

inline ModPoly reduce_mod(const IntPolynomial& f, std::int64_t p) {
  ModPoly r;
  r.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) r.push_back(mod_small(c, p));
  trim(r);
  return r;
}

// Distinct-degree factorization of a square-free monic polynomial.
inline std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, std::int64_t p) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = mp_powmod(h, BigInt(p), f, p);
    ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = mp_divmod(f, g, p).first;
      h = mp_mod(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus splitting of a product of distinct monic irreducibles of degree d.
inline void equal_degree(const ModPoly& f, int d, std::int64_t p, std::mt19937_64& rng,
                         std::vector<ModPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  BigInt half_exp = (pow(BigInt(p), static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& v : a) v = coeff(rng);
    trim(a);
    if (a.size() <= 1) continue;
    ModPoly g = mp_gcd(a, f, p);
    if (g.size() == 1) {
      ModPoly b;
      if (p == 2) {
        // trace map a + a^2 + ... + a^(2^(d-1))
        ModPoly term = a;
        b = a;
        for (int i = 1; i < d; ++i) {
          term = mp_mod(mp_mul(term, term, p), f, p);
          b = mp_add(b, term, p);
        }
      } else {
        b = mp_sub(mp_powmod(a, half_exp, f, p), ModPoly{1}, p);
      }
      g = mp_gcd(b, f, p);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(mp_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---- arithmetic in (Z/m)[x]; coefficients in [0, m) ----

inline IntPolynomial zm_reduce(const IntPolynomial& a, const BigInt& m) {
  std::vector<BigInt> c = a.coefficients();
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(c));
}

// Division by a monic polynomial in (Z/m)[x].
inline std::pair<IntPolynomial, IntPolynomial> zm_divmod_monic(const IntPolynomial& a, const IntPolynomial& b,
                                                               const BigInt& m) {
  if (!b.is_monic()) throw std::domain_error("divisor must be monic");
  std::vector<BigInt> rem = zm_reduce(a, m).coefficients();
  const int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 < db) return {IntPolynomial{}, IntPolynomial(std::move(rem))};
  std::vector<BigInt> quo(rem.size() - static_cast<std::size_t>(db));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    BigInt q = rem[static_cast<std::size_t>(i)];
    mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {zm_reduce(IntPolynomial(std::move(quo)), m), zm_reduce(IntPolynomial(std::move(rem)), m)};
}

inline IntPolynomial from_modpoly(const ModPoly& a) {
  std::vector<BigInt> c;
  c.reserve(a.size());
  for (auto v : a) c.emplace_back(static_cast<long>(v));
  return IntPolynomial(std::move(c));
}

// One factor pair f = g*h mod p lifted to f = g*h mod p^k, with h monic.
inline std::pair<IntPolynomial, IntPolynomial> hensel_lift_pair(const IntPolynomial& f, const ModPoly& g0,
                                                                const ModPoly& h0, std::int64_t p,
                                                                const BigInt& target) {
  ModPoly gcd_p, s_p, t_p;
  mp_ext_gcd(g0, h0, p, gcd_p, s_p, t_p);
  if (gcd_p.size() != 1) throw std::logic_error("Hensel lifting needs coprime factors");
  IntPolynomial g = from_modpoly(g0), h = from_modpoly(h0), s = from_modpoly(s_p), t = from_modpoly(t_p);
  BigInt m = p;
  while (m < target) {
    BigInt m2 = m * m;
    IntPolynomial e = zm_reduce(f - g * h, m2);
    auto [q, r] = zm_divmod_monic(s * e, h, m2);
    IntPolynomial g_new = zm_reduce(g + t * e + q * g, m2);
    IntPolynomial h_new = zm_reduce(h + r, m2);
    IntPolynomial b = zm_reduce(s * g_new + t * h_new - IntPolynomial::constant(1), m2);
    auto [c, d] = zm_divmod_monic(s * b, h_new, m2);
    s = zm_reduce(s - d, m2);
    t = zm_reduce(t - t * b - c * g_new, m2);
    g = std::move(g_new);
    h = std::move(h_new);
    m = std::move(m2);
  }
  return {zm_reduce(g, target), zm_reduce(h, target)};
}

// Lifts f = lc(f) * prod(factors) mod p to the same shape mod target = p^k.
// Returned factors are monic.
inline void hensel_lift(const IntPolynomial& f, const std::vector<ModPoly>& factors, std::int64_t p,
                        const BigInt& target, std::vector<IntPolynomial>& out) {
  if (factors.size() == 1) {
    BigInt inv;
    BigInt lc = f.leading();
    if (!mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()))
      throw std::logic_error("leading coefficient not invertible in Hensel lift");
    out.push_back(zm_reduce(f * inv, target));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  ModPoly a{1}, b{1};
  for (const auto& g : left) a = mp_mul(a, g, p);
  for (const auto& g : right) b = mp_mul(b, g, p);
  a = mp_scale(a, mod_small(f.leading(), p), p);
  auto [g, h] = hensel_lift_pair(f, a, b, p, target);
  hensel_lift(g, left, p, target, out);
  hensel_lift(h, right, p, target, out);
}

inline bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Factors a square-free primitive polynomial with positive leading coefficient.
inline std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};

  std::int64_t p = 2;
  ModPoly fp;
  for (;; ++p) {
    if (!is_prime_small(p) || mod_small(f.leading(), p) == 0) continue;
    fp = mp_monic(reduce_mod(f, p), p);
    if (mp_gcd(fp, mp_derivative(fp, p), p).size() == 1) break;
  }

  std::mt19937_64 rng(0x5eed5eedULL + static_cast<std::uint64_t>(p));
  std::vector<ModPoly> modular;
  for (auto& [g, d] : distinct_degree(fp, p)) equal_degree(g, d, p, rng, modular);
  if (modular.size() == 1) return {f};
  std::sort(modular.begin(), modular.end());

  // coefficients of any factor are bounded by 2^n * ||f||_2; candidates carry an extra lc(f)
  BigInt norm_sq = 0;
  for (const auto& c : f.coefficients()) norm_sq += c * c;
  BigInt bound = 2 * abs(f.leading()) * pow(BigInt(2), static_cast<unsigned long>(n)) * (isqrt(norm_sq) + 1);
  BigInt modulus = p;
  while (modulus <= bound) modulus *= p;

  std::vector<IntPolynomial> lifted;
  hensel_lift(f, modular, p, modulus, lifted);

  std::vector<IntPolynomial> found;
  IntPolynomial rest = f;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool hit = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    for (;;) {
      IntPolynomial cand = IntPolynomial::constant(rest.leading());
      for (auto i : idx) cand = zm_reduce(cand * lifted[i], modulus);
      std::vector<BigInt> sym = cand.coefficients();
      for (auto& v : sym) v = symmetric_mod(v, modulus);
      IntPolynomial candidate = primitive_part(IntPolynomial(std::move(sym)));
      IntPolynomial quotient;
      if (candidate.degree() > 0 && divides_exactly(candidate, rest, &quotient)) {
        found.push_back(candidate);
        rest = quotient;
        for (std::size_t k = subset_size; k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
        hit = true;
        break;
      }
      // next combination
      std::size_t k = subset_size;
      while (k > 0 && idx[k - 1] == r - subset_size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++subset_size;
  }
  if (rest.degree() > 0) found.push_back(primitive_part(rest));
  return found;
}

// Yun's square-free decomposition over Q: pairs (square-free part, multiplicity).
inline std::vector<std::pair<RationalPolynomial, unsigned>> squarefree_decomposition(const RationalPolynomial& f) {
  std::vector<std::pair<RationalPolynomial, unsigned>> out;
  RationalPolynomial df = f.derivative();
  RationalPolynomial a = gcd(f, df);
  RationalPolynomial b = divmod(f, a).first;
  RationalPolynomial c = divmod(df, a).first;
  RationalPolynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RationalPolynomial ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai, i);
    ++i;
  }
  return out;
}

inline bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coefficients()[static_cast<std::size_t>(i)];
    const auto& y = b.coefficients()[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace detail

/// Complete factorization over Q into primitive irreducible integer
/// polynomials with positive leading coefficients. Factors are sorted by
/// degree, then coefficients from the top down.
inline Factorization factor_poly(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  Factorization result;
  for (const auto& [part, mult] : detail::squarefree_decomposition(p)) {
    IntPolynomial prim = integer_normalize(part).second;
    for (auto& irreducible : detail::zassenhaus(prim)) result.factors.emplace_back(std::move(irreducible), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return detail::poly_less(a.first, b.first); });
  Rational lead_product = 1;
  for (const auto& [f, e] : result.factors) lead_product *= Rational(pow(f.leading(), e));
  result.unit = p.leading() / lead_product;
  return result;
}

inline Factorization factor_poly(const IntPolynomial& p) { return factor_poly(to_rational(p)); }

}  // namespace modcurve::exact
