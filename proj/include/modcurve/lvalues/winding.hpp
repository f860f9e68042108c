#pragma once

// L(A, 1) != 0 decided by exact linear algebra: the winding element
// {0, oo} projects to a nonzero vector in the factor's Hecke-isotypic
// piece exactly when the L-value of the factor at 1 does not vanish.

#include "modcurve/exact/charpoly.hpp"
#include "modcurve/exact/factor.hpp"
#include "modcurve/modsym/decompose.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcurve::lvalues {

using exact::Rational;
using exact::RationalMatrix;
using exact::RationalPolynomial;
using modsym::HeckeCache;
using modsym::IsogenyFactor;
using modsym::SymbolSpace;

struct WindingElement {
  Int level = 0;
  std::vector<Rational> coordinates;
};

/// The symbol {0, oo}, which is the Manin symbol (0 : 1).
inline WindingElement winding_element(const SymbolSpace& s) { return {s.level(), s.manin_symbol(0, 1)}; }

enum class LFlagValue { nonzero, zero };

struct LFlag {
  Int new_level = 0;
  int dimension = 0;
  LFlagValue value = LFlagValue::zero;
  bool nonzero() const { return value == LFlagValue::nonzero; }
};

/// Projection of v onto the Hecke-stable subspace spanned by `basis`,
/// along the sum of all other generalized Hecke eigenspaces. Each probe
/// prime contributes the idempotent v(T) G(T) where F = f^e is the full
/// f-primary part of charpoly(T), G the cofactor and uF + vG = 1; probing
/// stops once the common kernel of the F(T) shrinks to the subspace.
inline std::vector<Rational> hecke_projection(HeckeCache& hecke, const RationalMatrix& basis, std::vector<Rational> v,
                                              const std::vector<Int>& probes) {
  const std::size_t target_dim = basis.cols();
  const std::size_t n = hecke.space().dimension();
  if (target_dim == n) return v;
  RationalMatrix constraints;
  for (Int ell : probes) {
    const RationalMatrix& t = hecke(ell);
    auto minpoly = exact::factor_poly(exact::char_poly(exact::restrict_to(t, basis)));
    if (minpoly.factors.size() != 1) throw std::domain_error("subspace is not Hecke-primary");
    RationalPolynomial f = exact::to_rational(minpoly.factors.front().first);
    RationalPolynomial full = exact::char_poly(t);
    RationalPolynomial primary = RationalPolynomial::constant(1), cofactor = full;
    for (;;) {
      auto [q, r] = exact::divmod(cofactor, f);
      if (!r.is_zero()) break;
      cofactor = q;
      primary *= f;
    }
    auto bez = exact::extended_gcd(primary, cofactor);
    if (bez.gcd.degree() != 0) throw std::logic_error("primary part and cofactor are not coprime");
    v = exact::evaluate_on(bez.v * cofactor, t, v);
    constraints = constraints.vstack(exact::evaluate(primary, t));
    if (exact::kernel_basis(constraints).cols() == target_dim) return v;
  }
  throw modsym::DecompositionError("level " + std::to_string(hecke.space().level()) +
                                   ": isotypic projection not separated by the probe primes");
}

/// Nonvanishing flag for one factor, computed in the symbol space of its
/// new level.
inline LFlag l_nonvanishing(HeckeCache& hecke, const IsogenyFactor& factor, const WindingElement& w,
                            const std::vector<Int>& probes) {
  if (factor.new_level != w.level || hecke.space().level() != w.level)
    throw std::invalid_argument("l_nonvanishing: factor and winding element live at different levels");
  auto projected = hecke_projection(hecke, factor.basis, w.coordinates, probes);
  bool nonzero = false;
  for (const auto& x : projected) nonzero = nonzero || x != 0;
  return {factor.new_level, factor.dimension, nonzero ? LFlagValue::nonzero : LFlagValue::zero};
}

inline LFlag l_nonvanishing(const IsogenyFactor& factor, const WindingElement& w) {
  SymbolSpace space(factor.new_level);
  HeckeCache hecke(space);
  return l_nonvanishing(hecke, factor, w, modsym::default_probe_primes(factor.level));
}

struct FinitenessResult {
  bool finite = false;                // every factor has L(A_i, 1) != 0
  modsym::DecompositionResult decomposition;
  std::vector<LFlag> flags;           // one per grouped factor; old copies share their flag
  std::string assumption;             // the cited input that turns flags into finiteness
};

/// Flags for every factor of decompose(N). Finiteness of J_0(N)(Q) follows
/// from all flags being nonzero only through the cited rank-zero case of
/// BSD for modular abelian varieties, which is not computed here.
inline FinitenessResult finiteness_flag(Int n, const modsym::DecomposeOptions& options = {}) {
  FinitenessResult out;
  out.decomposition = modsym::decompose(n, options);
  out.assumption = "L(A,1) != 0 implies A(Q) finite (Kato); assumed, not computed";
  const auto probes = modsym::default_probe_primes(n);
  Int current_level = 0;
  std::unique_ptr<SymbolSpace> space;
  std::unique_ptr<HeckeCache> hecke;
  WindingElement w;
  for (const auto& f : out.decomposition.factors) {
    if (f.new_level != current_level) {
      current_level = f.new_level;
      space = std::make_unique<SymbolSpace>(current_level);
      hecke = std::make_unique<HeckeCache>(*space);
      w = winding_element(*space);
    }
    out.flags.push_back(l_nonvanishing(*hecke, f, w, probes));
  }
  out.finite = true;
  for (const auto& fl : out.flags) out.finite = out.finite && fl.nonzero();
  return out;
}

}  // namespace modcurve::lvalues
