#pragma once

#include "modcurve/exact/bigint.hpp"
#include "modcurve/exact/matrix.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcurve::exact {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  static Polynomial monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1);
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  T operator()(const T& x) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(T(1)), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

template <typename T>
std::string to_string(const Polynomial<T>& p, const char* var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit = (c == 1);
    if (!unit || i == 0) out += to_string(c);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  return RationalPolynomial(std::move(c));
}

inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = gcd(g, c);
  return g;
}

/// Primitive part with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coefficients();
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

/// Splits a rational polynomial into (scalar, primitive integer polynomial
/// with positive leading coefficient) with p = scalar * primitive.
inline std::pair<Rational, IntPolynomial> integer_normalize(const RationalPolynomial& p) {
  if (p.is_zero()) return {Rational(0), IntPolynomial{}};
  BigInt den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, c.get_den());
  std::vector<BigInt> ints;
  ints.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) ints.push_back(c.get_num() * (den / c.get_den()));
  IntPolynomial ip(std::move(ints));
  IntPolynomial prim = primitive_part(ip);
  Rational scale = make_rational(ip.leading(), den) / Rational(prim.leading());
  return {scale, prim};
}

/// Quotient and remainder over a field.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                               const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

inline RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading());
}

/// Monic gcd over the rationals (zero if both inputs are zero).
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

struct BezoutResult {
  RationalPolynomial gcd, u, v;  // u*a + v*b = gcd
};

inline BezoutResult extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r0 = a, r1 = b;
  RationalPolynomial u0 = RationalPolynomial::constant(1), u1{};
  RationalPolynomial v0{}, v1 = RationalPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, u0 * inv, v0 * inv};
}

/// Exact division of integer polynomials; returns false if b does not divide a over Z.
inline bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  const int db = b.degree();
  if (a.degree() < db) return false;
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const BigInt& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const BigInt& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    BigInt q = top / lead;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(quo));
  return true;
}

/// p(M) by Horner's rule.
inline RationalMatrix evaluate(const RationalPolynomial& p, const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c != 0)
      for (std::size_t k = 0; k < n; ++k) acc(k, k) += c;
  }
  return acc;
}

/// p(M) v without forming p(M).
inline std::vector<Rational> evaluate_on(const RationalPolynomial& p, const RationalMatrix& m,
                                         const std::vector<Rational>& v) {
  std::vector<Rational> acc(v.size());
  for (int i = p.degree(); i >= 0; --i) {
    acc = m.apply(acc);
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c != 0)
      for (std::size_t k = 0; k < v.size(); ++k) acc[k] += c * v[k];
  }
  return acc;
}

}  // namespace modcurve::exact
