#pragma once

#include "modcurve/arith.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace modcurve::modsym {

/// A point (c : d) of the projective line over Z/N, in normalized form:
/// the lexicographically smallest pair among its unit multiples.
struct P1Element {
  Int c = 0;
  Int d = 0;
  friend bool operator==(const P1Element&, const P1Element&) = default;
};

/// All of P^1(Z/N) with constant-time normalization of arbitrary pairs.
class P1List {
 public:
  explicit P1List(Int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("P1 needs a positive level");
    index_.assign(static_cast<std::size_t>(n * n), -1);
    std::vector<Int> units;
    for (Int u = 1; u <= n; ++u)
      if (gcd(u, n) == 1) units.push_back(u % n);
    // Scanning pairs in lexicographic order meets each orbit at its minimum first.
    for (Int c = 0; c < n; ++c)
      for (Int d = 0; d < n; ++d) {
        if (gcd(gcd(c, d), n) != 1 || index_[slot(c, d)] >= 0) continue;
        const auto idx = static_cast<long>(elements_.size());
        elements_.push_back({c, d});
        for (Int u : units) index_[slot(u * c % n, u * d % n)] = idx;
      }
  }

  Int level() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const P1Element& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<P1Element>& elements() const { return elements_; }

  /// Index of the class of (c : d), or nothing if gcd(c, d, N) != 1.
  std::optional<std::size_t> index(Int c, Int d) const {
    long i = index_[slot(mod(c, n_), mod(d, n_))];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }

  P1Element normalize(Int c, Int d) const {
    auto i = index(c, d);
    if (!i) throw std::domain_error("pair does not define a point of P1(Z/N)");
    return elements_[*i];
  }

 private:
  std::size_t slot(Int c, Int d) const { return static_cast<std::size_t>(c * n_ + d); }

  Int n_;
  std::vector<P1Element> elements_;
  std::vector<long> index_;
};

/// One representative per class of P^1(Z/N), lexicographically ordered.
inline std::vector<P1Element> enumerate_p1(Int n) {
  if (n == 0) throw std::invalid_argument("enumerate_p1: N must be positive");
  return P1List(n).elements();
}

}  // namespace modcurve::modsym
