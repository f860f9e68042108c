#pragma once

// Splitting the cuspidal symbols of level N into simple Hecke modules,
// one new level at a time.

#include "modcurve/arith.hpp"
#include "modcurve/exact/charpoly.hpp"
#include "modcurve/exact/factor.hpp"
#include "modcurve/modsym/degeneracy.hpp"
#include "modcurve/modsym/hecke.hpp"
#include "modcurve/modsym/symbol_space.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcurve::modsym {

using exact::IntPolynomial;

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ceil(index / 6), the weight-2 Sturm bound.
inline Int sturm_bound(Int n) { return (gamma0_index(n) + 5) / 6; }

/// Hecke matrices on one symbol space, computed on first use.
class HeckeCache {
 public:
  explicit HeckeCache(const SymbolSpace& space) : space_(&space) {}
  const SymbolSpace& space() const { return *space_; }
  const RationalMatrix& operator()(Int ell) {
    auto it = ops_.find(ell);
    if (it == ops_.end()) it = ops_.emplace(ell, hecke_operator(*space_, ell).matrix).first;
    return it->second;
  }

 private:
  const SymbolSpace* space_;
  std::map<Int, RationalMatrix> ops_;
};

/// Cuspidal symbols killed by every degeneracy map {a,b} -> {a,b} and
/// {a,b} -> {q a, q b} to level N/q, q prime. Columns in the coordinates of s.
inline RationalMatrix new_subspace(const SymbolSpace& s) {
  RationalMatrix cusp = cuspidal_subspace(s);
  if (cusp.cols() == 0) return cusp;
  RationalMatrix constraints;
  for (Int q : prime_divisors(s.level())) {
    SymbolSpace lower(s.level() / q);
    if (cuspidal_subspace(lower).cols() == 0) continue;
    for (Int t : {Int{1}, q}) constraints = constraints.vstack(degeneracy_map(s, lower, t) * cusp);
  }
  if (constraints.rows() == 0) return cusp;
  return cusp * exact::kernel_basis(constraints);
}

struct FingerprintEntry {
  Int prime;
  IntPolynomial minpoly;  // of T_prime on the factor
};

struct IsogenyFactor {
  Int level = 0;         // the N being decomposed
  Int new_level = 0;     // M, the level where the factor is new
  int dimension = 0;     // d: half the symbol dimension
  int multiplicity = 0;  // number of divisors of N / M
  std::vector<FingerprintEntry> fingerprint;
  RationalMatrix basis;  // columns, in the level-M symbol coordinates
};

struct DecompositionResult {
  Int level = 0;
  std::vector<IsogenyFactor> factors;  // grouped, canonical order

  /// Flattened with multiplicity: each factor index repeated m times.
  std::vector<std::size_t> flattened() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (int k = 0; k < factors[i].multiplicity; ++k) out.push_back(i);
    return out;
  }
  std::vector<int> flattened_dimensions() const {
    std::vector<int> out;
    for (auto i : flattened()) out.push_back(factors[i].dimension);
    return out;
  }
  std::size_t t() const { return flattened().size(); }
  int total_dimension() const {
    int g = 0;
    for (const auto& f : factors) g += f.dimension * f.multiplicity;
    return g;
  }
};

struct DecomposeOptions {
  /// Probe primes in the order tried; empty means ascending primes not
  /// dividing N up to the Sturm bound. Must not contain divisors of N.
  std::vector<Int> probe_primes;
};

inline std::vector<Int> default_probe_primes(Int n) {
  std::vector<Int> out;
  for (Int p : primes_up_to(sturm_bound(n)))
    if (n % p != 0) out.push_back(p);
  return out;
}

namespace detail {

inline bool fingerprint_less(const std::vector<FingerprintEntry>& a, const std::vector<FingerprintEntry>& b) {
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto& x = a[i].minpoly.coefficients();
    const auto& y = b[i].minpoly.coefficients();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return a.size() < b.size();
}

inline bool same_fingerprint(const std::vector<FingerprintEntry>& a, const std::vector<FingerprintEntry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].minpoly == b[i].minpoly)) return false;
  return true;
}

// Minimal polynomial of T on a simple piece: its characteristic polynomial
// is a power of one irreducible.
inline IntPolynomial piece_minpoly(const RationalMatrix& restricted) {
  auto fac = exact::factor_poly(exact::char_poly(restricted));
  if (fac.factors.size() != 1) throw DecompositionError("Hecke operator is not primary on a simple factor");
  return fac.factors.front().first;
}

}  // namespace detail

/// Simple pieces of the new cuspidal symbols at level m, separated by T_ell
/// for the given probe primes (which avoid the outer level).
inline std::vector<RationalMatrix> split_new_subspace(const SymbolSpace& space, HeckeCache& hecke,
                                                      const std::vector<Int>& probes) {
  RationalMatrix fresh = new_subspace(space);
  if (fresh.cols() == 0) return {};
  std::vector<RationalMatrix> pending{fresh}, done;
  for (Int ell : probes) {
    if (pending.empty()) break;
    std::vector<RationalMatrix> next;
    for (const auto& piece : pending) {
      RationalMatrix op = exact::restrict_to(hecke(ell), piece);
      auto fac = exact::factor_poly(exact::char_poly(op));
      if (fac.factors.size() == 1) {
        (fac.factors.front().second == 2 ? done : next).push_back(piece);
        continue;
      }
      for (const auto& [f, e] : fac.factors) {
        auto power = exact::to_rational(f).pow(e);
        RationalMatrix sub = piece * exact::kernel_basis(exact::evaluate(power, op));
        if (sub.cols() != static_cast<std::size_t>(e) * static_cast<std::size_t>(f.degree()))
          throw DecompositionError("generalized eigenspace has unexpected dimension");
        (e == 2 ? done : next).push_back(std::move(sub));
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty())
    throw DecompositionError("level " + std::to_string(space.level()) +
                             ": factors not separated within the Sturm bound");
  return done;
}

/// Decomposition of the cuspidal symbols of level N into simple factors,
/// new level by new level, with multiplicities from the number of
/// divisors of N / M.
inline DecompositionResult decompose(Int n, const DecomposeOptions& options = {}) {
  if (n < 1) throw std::invalid_argument("decompose: N must be positive");
  std::vector<Int> probes = options.probe_primes.empty() ? default_probe_primes(n) : options.probe_primes;
  for (Int p : probes)
    if (n % p == 0 || !is_prime(p)) throw std::invalid_argument("decompose: probe primes must be primes not dividing N");
  // fingerprint primes are fixed by N alone so the canonical order does not depend on probe order
  std::vector<Int> ascending = default_probe_primes(n);

  DecompositionResult result;
  result.level = n;
  for (Int m : divisors(n)) {
    SymbolSpace space(m);
    if (cuspidal_subspace(space).cols() == 0) continue;
    HeckeCache hecke(space);
    auto pieces = split_new_subspace(space, hecke, probes);
    std::vector<IsogenyFactor> level_factors;
    for (auto& piece : pieces) {
      IsogenyFactor f;
      f.level = n;
      f.new_level = m;
      f.dimension = static_cast<int>(piece.cols() / 2);
      f.multiplicity = static_cast<int>(num_divisors(n / m));
      f.basis = std::move(piece);
      level_factors.push_back(std::move(f));
    }
    // grow fingerprints until factors of equal dimension are told apart
    std::size_t depth = std::min<std::size_t>(4, ascending.size());
    for (std::size_t k = 0; k < ascending.size(); ++k) {
      if (k >= depth) {
        bool tie = false;
        for (std::size_t i = 0; i < level_factors.size() && !tie; ++i)
          for (std::size_t j = i + 1; j < level_factors.size() && !tie; ++j)
            tie = level_factors[i].dimension == level_factors[j].dimension &&
                  detail::same_fingerprint(level_factors[i].fingerprint, level_factors[j].fingerprint);
        if (!tie) break;
      }
      for (auto& f : level_factors)
        f.fingerprint.push_back({ascending[k], detail::piece_minpoly(exact::restrict_to(hecke(ascending[k]), f.basis))});
    }
    for (auto& f : level_factors) result.factors.push_back(std::move(f));
  }
  std::stable_sort(result.factors.begin(), result.factors.end(), [](const IsogenyFactor& a, const IsogenyFactor& b) {
    if (a.new_level != b.new_level) return a.new_level < b.new_level;
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return detail::fingerprint_less(a.fingerprint, b.fingerprint);
  });
  return result;
}

}  // namespace modcurve::modsym
