#include "modcurve/arith.hpp"
#include "modcurve/exact/charpoly.hpp"
#include "modcurve/exact/factor.hpp"
#include "modcurve/modsym/decompose.hpp"
#include "modcurve/modsym/degeneracy.hpp"
#include "modcurve/modsym/hecke.hpp"
#include "modcurve/modsym/p1.hpp"
#include "modcurve/modsym/symbol_space.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace modcurve;
using namespace modcurve::modsym;
using exact::IntPolynomial;
using exact::RationalMatrix;

namespace {

RationalMatrix cuspidal_hecke(const SymbolSpace& s, Int ell) {
  return exact::restrict_to(hecke_operator(s, ell).matrix, cuspidal_subspace(s));
}

// prod (x - a_i)^2 over the given eigenvalues
IntPolynomial squared_linear_product(const std::vector<long>& eigenvalues) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (long a : eigenvalues) {
    IntPolynomial lin({exact::BigInt(-a), exact::BigInt(1)});
    out = out * lin * lin;
  }
  return out;
}

}  // namespace

TEST(P1, MatchesBruteForceOrbitsUpTo60) {
  for (Int n = 1; n <= 60; ++n) {
    auto orbits = oracle::p1_orbits(n);
    P1List list(n);
    ASSERT_EQ(list.size(), orbits.size()) << "N=" << n;
    EXPECT_EQ(static_cast<Int>(list.size()), gamma0_index(n)) << "N=" << n;
    // every element represents a different orbit and sits inside it
    std::vector<int> hit(orbits.size(), 0);
    for (const auto& e : list.elements()) {
      auto it = std::find_if(orbits.begin(), orbits.end(), [&](const auto& o) { return o.count({e.c, e.d}) > 0; });
      ASSERT_NE(it, orbits.end()) << "N=" << n;
      ++hit[static_cast<std::size_t>(it - orbits.begin())];
    }
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; })) << "N=" << n;
    // normalize sends every orbit member to its representative
    for (const auto& o : orbits) {
      auto rep = list.normalize(o.begin()->first, o.begin()->second);
      for (const auto& [c, d] : o) EXPECT_EQ(list.normalize(c, d), rep);
    }
  }
}

TEST(P1, RejectsBadInput) {
  EXPECT_THROW(enumerate_p1(0), std::invalid_argument);
  P1List l(12);
  EXPECT_FALSE(l.index(2, 4).has_value());
  EXPECT_THROW(l.normalize(3, 6), std::domain_error);
  EXPECT_EQ(enumerate_p1(1).size(), 1u);
}

TEST(SymbolSpace, DimensionsAtSmallLevels) {
  SymbolSpace s11(11);
  EXPECT_EQ(s11.dimension(), 3u);
  EXPECT_EQ(cuspidal_subspace(s11).cols(), 2u);
  SymbolSpace s39(39);
  EXPECT_EQ(s39.dimension(), 9u);
  EXPECT_EQ(s39.cusps().size(), 4u);
  EXPECT_EQ(cuspidal_subspace(s39).cols(), 6u);
  SymbolSpace s1(1);
  EXPECT_EQ(s1.dimension(), 0u);  // 2g + cusps - 1
  EXPECT_EQ(cuspidal_subspace(s1).cols(), 0u);
}

TEST(SymbolSpace, CuspRepresentativesAreInequivalent) {
  for (Int n : {36, 39, 49, 64, 143}) {
    SymbolSpace s(n);
    const auto& c = s.cusps();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(cusps_equivalent(c[i], c[j], n)) << n;
  }
}

TEST(SymbolSpace, SymbolsAreAdditiveAlongPaths) {
  SymbolSpace s(39);
  auto a = Cusp::make(1, 3), b = Cusp::make(2, 7), c = Cusp::make(-5, 13);
  auto ab = s.symbol(a, b), bc = s.symbol(b, c), ac = s.symbol(a, c);
  for (std::size_t i = 0; i < ac.size(); ++i) EXPECT_EQ(ab[i] + bc[i], ac[i]);
  auto aa = s.symbol(a, a);
  EXPECT_TRUE(std::all_of(aa.begin(), aa.end(), [](const auto& x) { return x == 0; }));
}

TEST(Heilbronn, DeterminantIsP) {
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    for (const auto& h : heilbronn_cremona(p)) EXPECT_EQ(h[0] * h[3] - h[1] * h[2], p);
  }
  EXPECT_THROW(heilbronn_cremona(9), std::invalid_argument);
}

TEST(Hecke, Level11MatchesPointCounts) {
  SymbolSpace s(11);
  for (Int p : {2, 3, 5, 7, 13}) {
    long ap = oracle::trace_of_frobenius(oracle::curve_11a, p);
    EXPECT_EQ(exact::integer_char_poly(cuspidal_hecke(s, p)), squared_linear_product({ap})) << "p=" << p;
  }
  EXPECT_EQ(exact::to_string(exact::integer_char_poly(cuspidal_hecke(s, 2))), "x^2 + 4*x + 4");
}

TEST(Hecke, Level37MatchesBothCurves) {
  SymbolSpace s(37);
  for (Int p : {2, 3, 5, 7}) {
    long a = oracle::trace_of_frobenius(oracle::curve_37a, p);
    long b = oracle::trace_of_frobenius(oracle::curve_37b, p);
    EXPECT_EQ(exact::integer_char_poly(cuspidal_hecke(s, p)), squared_linear_product({a, b})) << "p=" << p;
  }
}

TEST(Hecke, EisensteinEigenvalueAtPrimeLevel) {
  // the boundary-carrying part of M_2(Gamma_0(p)) has T_ell = 1 + ell
  SymbolSpace s(11);
  auto chi = exact::integer_char_poly(hecke_operator(s, 3).matrix);
  IntPolynomial lin({exact::BigInt(-4), exact::BigInt(1)});
  EXPECT_TRUE(exact::divides_exactly(lin, chi, nullptr));
}

TEST(Hecke, CuspidalTraces) {
  EXPECT_EQ(cuspidal_trace(11, 2), -2);
  EXPECT_EQ(cuspidal_trace(37, 2), oracle::trace_of_frobenius(oracle::curve_37a, 2) +
                                       oracle::trace_of_frobenius(oracle::curve_37b, 2));
  EXPECT_EQ(cuspidal_trace(13, 2), 0);
}

TEST(Hecke, OperatorsCommute) {
  for (Int n : {33, 39, 45, 63, 64}) {
    SymbolSpace s(n);
    std::vector<RationalMatrix> ops;
    for (Int p : {2, 5, 7, 11})
      if (n % p != 0) ops.push_back(hecke_operator(s, p).matrix);
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j) EXPECT_EQ(ops[i] * ops[j], ops[j] * ops[i]) << "N=" << n;
  }
}

TEST(Hecke, RejectsBadIndex) {
  SymbolSpace s(39);
  EXPECT_THROW(hecke_operator(s, 3), std::invalid_argument);
  EXPECT_THROW(hecke_operator(s, 4), std::invalid_argument);
}

TEST(Star, InvolutionCommutingWithHecke) {
  for (Int n : {11, 39, 91}) {
    SymbolSpace s(n);
    auto st = star_involution(s);
    EXPECT_EQ(st * st, RationalMatrix::identity(s.dimension()));
    auto t2 = hecke_operator(s, 2).matrix;
    EXPECT_EQ(st * t2, t2 * st);
  }
}

TEST(Degeneracy, Ranks) {
  SymbolSpace s22(22), s11(11);
  auto cusp22 = cuspidal_subspace(s22);
  for (Int t : {1, 2}) {
    auto m = degeneracy_map(s22, s11, t) * cusp22;
    EXPECT_EQ(exact::rank(m), 2u) << "t=" << t;
  }
  SymbolSpace s39(39), s13(13), s3(3);
  auto cusp39 = cuspidal_subspace(s39);
  EXPECT_TRUE((degeneracy_map(s39, s13, 1) * cusp39).is_zero());
  EXPECT_TRUE((degeneracy_map(s39, s3, 13) * cusp39).is_zero());
  EXPECT_THROW(degeneracy_map(s39, s13, 2), std::invalid_argument);
  EXPECT_THROW(degeneracy_map(39, 11, 1), std::invalid_argument);
}

TEST(NewSubspace, Dimensions) {
  EXPECT_EQ(new_subspace(SymbolSpace(39)).cols(), 6u);
  EXPECT_EQ(new_subspace(SymbolSpace(22)).cols(), 0u);
  EXPECT_EQ(new_subspace(SymbolSpace(11)).cols(), 2u);
  // 33 = 3 * 11: two old copies of the level-11 curve, one new curve
  EXPECT_EQ(new_subspace(SymbolSpace(33)).cols(), 2u);
}

TEST(Decompose, Level39) {
  EXPECT_EQ(sturm_bound(39), 10);
  auto d = decompose(39);
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].new_level, 39);
  EXPECT_EQ(d.factors[0].dimension, 1);
  EXPECT_EQ(d.factors[1].dimension, 2);
  EXPECT_EQ(d.t(), 2u);
  EXPECT_EQ(d.total_dimension(), 3);
  // the elliptic factor is the curve 39a
  // primes below the Sturm bound 10 prime to 39: 2, 5, 7
  ASSERT_EQ(d.factors[0].fingerprint.size(), 3u);
  EXPECT_EQ(d.factors[0].fingerprint[0].prime, 2);
  long a2 = oracle::trace_of_frobenius(oracle::curve_39a, 2);
  EXPECT_EQ(d.factors[0].fingerprint[0].minpoly, IntPolynomial({exact::BigInt(-a2), exact::BigInt(1)}));
  EXPECT_EQ(exact::to_string(d.factors[1].fingerprint[0].minpoly), "x^2 + 2*x - 1");
}

TEST(Decompose, OldFactorsCarryMultiplicity) {
  auto d = decompose(22);
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.factors[0].new_level, 11);
  EXPECT_EQ(d.factors[0].multiplicity, 2);
  EXPECT_EQ(d.flattened_dimensions(), (std::vector<int>{1, 1}));

  auto d121 = decompose(121);
  EXPECT_EQ(d121.t(), 6u);
  EXPECT_EQ(d121.total_dimension(), 6);
}

TEST(Decompose, GenusZeroLevelIsEmpty) {
  EXPECT_TRUE(decompose(25).factors.empty());
  EXPECT_EQ(decompose(25).t(), 0u);
}

TEST(Decompose, ProbeOrderDoesNotMatter) {
  for (Int n : {65, 91, 143}) {
    auto a = decompose(n);
    DecomposeOptions opt;
    opt.probe_primes = default_probe_primes(n);
    std::reverse(opt.probe_primes.begin(), opt.probe_primes.end());
    auto b = decompose(n, opt);
    ASSERT_EQ(a.factors.size(), b.factors.size()) << n;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      EXPECT_EQ(a.factors[i].new_level, b.factors[i].new_level);
      EXPECT_EQ(a.factors[i].dimension, b.factors[i].dimension);
      EXPECT_EQ(a.factors[i].multiplicity, b.factors[i].multiplicity);
      ASSERT_EQ(a.factors[i].fingerprint.size(), b.factors[i].fingerprint.size());
      for (std::size_t k = 0; k < a.factors[i].fingerprint.size(); ++k)
        EXPECT_EQ(a.factors[i].fingerprint[k].minpoly, b.factors[i].fingerprint[k].minpoly);
    }
  }
}

TEST(Decompose, RejectsProbeDividingLevel) {
  DecomposeOptions opt;
  opt.probe_primes = {3, 5};
  EXPECT_THROW(decompose(39, opt), std::invalid_argument);
  EXPECT_THROW(decompose(0), std::invalid_argument);
}

TEST(Decompose, InsufficientProbesAreReported) {
  // at level 77 T_2 alone leaves two new factors glued together
  DecomposeOptions opt;
  opt.probe_primes = {2};
  EXPECT_THROW(decompose(77, opt), DecompositionError);
  EXPECT_EQ(decompose(77).total_dimension(), 7);
}
