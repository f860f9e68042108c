#pragma once

#include "modcurve/arith.hpp"
#include "modcurve/modsym/symbol_space.hpp"

#include <stdexcept>

namespace modcurve::modsym {

/// The map {a, b} -> {t a, t b} from level-N symbols to level-M symbols,
/// for M | N and t | N/M. Matrix has one column per source basis element.
inline RationalMatrix degeneracy_map(const SymbolSpace& source, const SymbolSpace& target, Int t) {
  const Int n = source.level(), m = target.level();
  if (n % m != 0) throw std::invalid_argument("degeneracy_map: target level must divide source level");
  if (t < 1 || (n / m) % t != 0) throw std::invalid_argument("degeneracy_map: t must divide N/M");
  RationalMatrix out(target.dimension(), source.dimension());
  for (std::size_t j = 0; j < source.dimension(); ++j) {
    const auto& x = source.p1()[source.basis_symbols()[j]];
    auto [a, b, c, d] = lift_to_sl2z(x.c, x.d, n);
    // g{0, oo} = {b/d, a/c}
    auto image = target.symbol(Cusp::make(t * b, d), Cusp::make(t * a, c));
    for (std::size_t i = 0; i < image.size(); ++i) out(i, j) = image[i];
  }
  return out;
}

inline RationalMatrix degeneracy_map(Int source_level, Int target_level, Int t) {
  if (source_level < 1 || target_level < 1 || source_level % target_level != 0)
    throw std::invalid_argument("degeneracy_map: target level must divide source level");
  return degeneracy_map(SymbolSpace(source_level), SymbolSpace(target_level), t);
}

}  // namespace modcurve::modsym
