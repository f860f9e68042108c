#pragma once

// Weight-2 modular symbols for Gamma_0(N) presented by Manin symbols.
//
// The Manin symbol (c : d) stands for g{0, oo} = {b/d, a/c} where
// g = [[a, b], [c, d]] is any lift to SL_2(Z). The space is the free
// Q-module on P^1(Z/N) modulo
//     x + x*S = 0,            S = [[0, -1], [1, 0]],
//     x + x*T + x*T^2 = 0,    T = [[0, -1], [1, -1]],
// with right action (c : d) * [[p, q], [r, s]] = (c p + d r : c q + d s).

#include "modcurve/arith.hpp"
#include "modcurve/exact/matrix.hpp"
#include "modcurve/modsym/p1.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modcurve::modsym {

using exact::Rational;
using exact::RationalMatrix;

/// A point of P^1(Q), u/v in lowest terms with v >= 0; oo is 1/0.
struct Cusp {
  Int num = 1;
  Int den = 0;

  static Cusp infinity() { return {1, 0}; }
  static Cusp make(Int u, Int v) {
    if (u == 0 && v == 0) throw std::invalid_argument("0/0 is not a cusp");
    Int g = gcd(u, v);
    u /= g;
    v /= g;
    if (v < 0 || (v == 0 && u < 0)) {
      u = -u;
      v = -v;
    }
    return {u, v};
  }
  bool is_infinity() const { return den == 0; }
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// Gamma_0(N)-equivalence of cusps: with u_j s_j = 1 mod v_j,
/// u1/v1 ~ u2/v2 iff s1 v2 = s2 v1 mod gcd(v1 v2, N).
inline bool cusps_equivalent(const Cusp& a, const Cusp& b, Int n) {
  auto s_of = [](const Cusp& x) -> Int {
    if (x.den == 0) return x.num;
    if (x.den == 1) return 0;
    return inverse_mod(x.num, x.den);
  };
  const Int m = gcd(a.den * b.den, n);
  return mod(s_of(a) * b.den - s_of(b) * a.den, m) == 0;
}

/// Integer matrix [[a, b], [c, d]] of determinant 1 whose bottom row
/// reduces to (c0 : d0) modulo N.
inline std::array<Int, 4> lift_to_sl2z(Int c0, Int d0, Int n) {
  if (n == 1) return {1, 0, 0, 1};
  Int c = mod(c0, n), d = mod(d0, n);
  if (c == 0) c = n;
  while (gcd(c, d) != 1) d += n;
  Int x, y;
  ext_gcd(c, d, x, y);  // x c + y d = 1
  return {y, -x, c, d};
}

struct SparseEntry {
  std::size_t index;
  Rational value;
};
using SparseVector = std::vector<SparseEntry>;

class SymbolSpace {
 public:
  explicit SymbolSpace(Int n) : n_(n), p1_(n) {
    if (n < 1) throw std::invalid_argument("symbol space needs N >= 1");
    reduce_relations();
    collect_cusps();
  }

  Int level() const { return n_; }
  const P1List& p1() const { return p1_; }
  std::size_t dimension() const { return basis_.size(); }

  /// P^1 indices of the Manin symbols forming the quotient basis.
  const std::vector<std::size_t>& basis_symbols() const { return basis_; }

  /// Quotient coordinates of every Manin symbol, indexed like p1().
  const std::vector<SparseVector>& manin_coordinates() const { return coords_; }

  /// Cusp class representatives, in order of first appearance.
  const std::vector<Cusp>& cusps() const { return cusps_; }

  std::size_t cusp_index(const Cusp& c) const {
    for (std::size_t i = 0; i < cusps_.size(); ++i)
      if (cusps_equivalent(cusps_[i], c, n_)) return i;
    throw std::logic_error("cusp class missing from the symbol space");
  }

  /// Boundary map, one column per basis element, one row per cusp class.
  const RationalMatrix& boundary_matrix() const { return boundary_; }

  std::vector<Rational> manin_symbol(Int c, Int d) const {
    std::vector<Rational> v(dimension());
    add_manin_symbol(v, c, d, Rational(1));
    return v;
  }

  void add_manin_symbol(std::vector<Rational>& v, Int c, Int d, const Rational& scale) const {
    auto i = p1_.index(c, d);
    if (!i) return;
    for (const auto& e : coords_[*i]) v[e.index] += scale * e.value;
  }

  /// Coordinates of the modular symbol {0, x}, by the continued fraction
  /// path through the convergents of x.
  void add_zero_to(std::vector<Rational>& v, const Cusp& x, const Rational& scale) const {
    add_manin_symbol(v, 0, 1, scale);  // {0, oo}
    if (x.is_infinity()) return;
    Int p_prev = 1, q_prev = 0;  // oo
    Int p_cur, q_cur;
    Int u = x.num, w = x.den;
    // first partial quotient is a floor so that negative x works
    Int a = u >= 0 ? u / w : -((-u + w - 1) / w);
    p_cur = a;
    q_cur = 1;
    for (;;) {
      Int e = p_cur * q_prev - p_prev * q_cur;  // +-1
      add_manin_symbol(v, e * q_cur, q_prev, scale);
      Int r = u - a * w;
      if (r == 0) break;
      u = w;
      w = r;
      a = u / w;
      Int p_next = a * p_cur + p_prev, q_next = a * q_cur + q_prev;
      p_prev = p_cur;
      q_prev = q_cur;
      p_cur = p_next;
      q_cur = q_next;
    }
  }

  /// Coordinates of the modular symbol {from, to}.
  std::vector<Rational> symbol(const Cusp& from, const Cusp& to) const {
    std::vector<Rational> v(dimension());
    add_zero_to(v, to, Rational(1));
    add_zero_to(v, from, Rational(-1));
    return v;
  }

  /// Image of a coordinate vector in the free module on cusp classes.
  std::vector<Rational> boundary(const std::vector<Rational>& v) const { return boundary_.apply(v); }

 private:
  void reduce_relations() {
    const std::size_t n = p1_.size();
    // 2-term relations: symbol i equals sign[i] * generator rep[i], or is zero.
    std::vector<long> rep(n, -1);
    std::vector<int> sign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (rep[i] >= 0 || sign[i] != 0) continue;
      const auto& x = p1_[i];
      std::size_t j = *p1_.index(x.d, -x.c);
      if (j == i) {
        rep[i] = static_cast<long>(i);
        sign[i] = 0;  // 2x = 0
        continue;
      }
      rep[i] = rep[j] = static_cast<long>(i);
      sign[i] = 1;
      sign[j] = -1;
    }
    std::vector<std::size_t> gens;
    std::vector<long> gen_col(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      if (sign[i] == 1) {
        gen_col[i] = static_cast<long>(gens.size());
        gens.push_back(i);
      }

    // 3-term relations over the 2-term generators.
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      const auto& x = p1_[i];
      std::size_t j = *p1_.index(x.d, -x.c - x.d);
      const auto& y = p1_[j];
      std::size_t k = *p1_.index(y.d, -y.c - y.d);
      seen[i] = seen[j] = seen[k] = true;
      std::vector<Rational> row(gens.size());
      bool nonzero = false;
      for (std::size_t s : {i, j, k}) {
        if (sign[s] == 0) continue;
        row[static_cast<std::size_t>(gen_col[static_cast<std::size_t>(rep[s])])] += sign[s];
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
    RationalMatrix rel(rows.size(), gens.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < gens.size(); ++c) rel(r, c) = rows[r][c];
    auto [echelon, pivots] = exact::rref(rel);

    std::vector<long> pivot_row(gens.size(), -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);
    std::vector<long> basis_pos(gens.size(), -1);
    for (std::size_t c = 0; c < gens.size(); ++c)
      if (pivot_row[c] < 0) {
        basis_pos[c] = static_cast<long>(basis_.size());
        basis_.push_back(gens[c]);
      }
    std::vector<SparseVector> gen_coords(gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) {
      if (basis_pos[c] >= 0) {
        gen_coords[c].push_back({static_cast<std::size_t>(basis_pos[c]), Rational(1)});
        continue;
      }
      const auto r = static_cast<std::size_t>(pivot_row[c]);
      for (std::size_t f = 0; f < gens.size(); ++f)
        if (basis_pos[f] >= 0 && echelon(r, f) != 0)
          gen_coords[c].push_back({static_cast<std::size_t>(basis_pos[f]), -echelon(r, f)});
    }
    coords_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      if (sign[i] == 0) continue;
      coords_[i] = gen_coords[static_cast<std::size_t>(gen_col[static_cast<std::size_t>(rep[i])])];
      if (sign[i] < 0)
        for (auto& e : coords_[i]) e.value = -e.value;
    }
  }

  std::size_t find_or_add_cusp(const Cusp& c) {
    for (std::size_t i = 0; i < cusps_.size(); ++i)
      if (cusps_equivalent(cusps_[i], c, n_)) return i;
    cusps_.push_back(c);
    return cusps_.size() - 1;
  }

  void collect_cusps() {
    find_or_add_cusp(Cusp::infinity());
    find_or_add_cusp(Cusp::make(0, 1));
    for (std::size_t i = 0; i < p1_.size(); ++i) {
      auto [a, b, c, d] = lift_to_sl2z(p1_[i].c, p1_[i].d, n_);
      find_or_add_cusp(Cusp::make(a, c));
      find_or_add_cusp(Cusp::make(b, d));
    }
    boundary_ = RationalMatrix(cusps_.size(), basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const auto& x = p1_[basis_[j]];
      auto [a, b, c, d] = lift_to_sl2z(x.c, x.d, n_);
      boundary_(find_or_add_cusp(Cusp::make(a, c)), j) += 1;
      boundary_(find_or_add_cusp(Cusp::make(b, d)), j) -= 1;
    }
  }

  Int n_;
  P1List p1_;
  std::vector<std::size_t> basis_;
  std::vector<SparseVector> coords_;
  std::vector<Cusp> cusps_;
  RationalMatrix boundary_;
};

inline SymbolSpace build_space(Int n) { return SymbolSpace(n); }

/// Basis (as columns) of the kernel of the boundary map: the cuspidal
/// symbols, of dimension 2g.
inline RationalMatrix cuspidal_subspace(const SymbolSpace& s) {
  if (s.dimension() == 0) return RationalMatrix(0, 0);
  return exact::kernel_basis(s.boundary_matrix());
}

}  // namespace modcurve::modsym
