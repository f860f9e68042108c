#pragma once

#include "modcurve/arith.hpp"
#include "modcurve/exact/charpoly.hpp"
#include "modcurve/modsym/symbol_space.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace modcurve::modsym {

using exact::BigInt;

/// Merel's set of determinant-p matrices in Cremona's continued-fraction
/// form; T_p on Manin symbols is (c : d) -> sum over h of (c : d) * h.
inline std::vector<std::array<Int, 4>> heilbronn_cremona(Int p) {
  if (!is_prime(p)) throw std::invalid_argument("Heilbronn matrices need a prime");
  if (p == 2) return {{1, 0, 0, 2}, {2, 0, 0, 1}, {2, 1, 0, 1}, {1, 0, 1, 2}};
  std::vector<std::array<Int, 4>> out{{1, 0, 0, p}};
  for (Int r = -(p / 2); r <= p / 2; ++r) {
    Int x1 = p, x2 = -r, y1 = 0, y2 = 1, a = -p, b = r;
    out.push_back({x1, x2, y1, y2});
    while (b != 0) {
      Int q = std::llround(static_cast<double>(a) / static_cast<double>(b));
      Int c = a - b * q;
      a = -b;
      b = c;
      Int x3 = q * x2 - x1;
      x1 = x2;
      x2 = x3;
      Int y3 = q * y2 - y1;
      y1 = y2;
      y2 = y3;
      out.push_back({x1, x2, y1, y2});
    }
  }
  return out;
}

struct HeckeOperator {
  Int level;
  Int index;
  RationalMatrix matrix;  // acts on column vectors of quotient coordinates
};

/// T_ell on the full symbol space, for a prime ell not dividing N.
inline HeckeOperator hecke_operator(const SymbolSpace& s, Int ell) {
  if (!is_prime(ell)) throw std::invalid_argument("hecke_operator: index must be prime");
  if (s.level() % ell == 0) throw std::invalid_argument("hecke_operator: prime divides the level");
  const auto heilbronn = heilbronn_cremona(ell);
  const std::size_t n = s.dimension();
  RationalMatrix m(n, n);
  const Rational one(1);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& x = s.p1()[s.basis_symbols()[j]];
    std::vector<Rational> image(n);
    for (const auto& h : heilbronn) s.add_manin_symbol(image, x.c * h[0] + x.d * h[2], x.c * h[1] + x.d * h[3], one);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = image[i];
  }
  return {s.level(), ell, std::move(m)};
}

/// The star involution {a, b} -> {-a, -b}, i.e. (c : d) -> (-c : d).
inline RationalMatrix star_involution(const SymbolSpace& s) {
  const std::size_t n = s.dimension();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& x = s.p1()[s.basis_symbols()[j]];
    auto image = s.manin_symbol(-x.c, x.d);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = image[i];
  }
  return m;
}

/// Trace of T_ell on S_2(Gamma_0(N)): half the trace on cuspidal symbols.
inline BigInt cuspidal_trace(Int n, Int ell) {
  if (n % ell == 0) throw std::invalid_argument("cuspidal_trace: prime divides the level");
  SymbolSpace s(n);
  RationalMatrix cusp = cuspidal_subspace(s);
  if (cusp.cols() == 0) return 0;
  RationalMatrix t = exact::restrict_to(hecke_operator(s, ell).matrix, cusp);
  Rational tr = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) tr += t(i, i);
  tr /= 2;
  if (!exact::is_integer(tr)) throw std::logic_error("cuspidal trace is not integral");
  return tr.get_num();
}

}  // namespace modcurve::modsym
