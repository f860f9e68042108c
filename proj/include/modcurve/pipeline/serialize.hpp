#pragma once

// JSON forms of the cached artifacts. Every number is a decimal string.

#include "modcurve/lvalues/winding.hpp"
#include "modcurve/modsym/decompose.hpp"
#include "modcurve/modsym/hecke.hpp"
#include "modcurve/pipeline/cache.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace modcurve::pipeline {

using exact::IntPolynomial;
using exact::Rational;
using exact::RationalMatrix;
using json = nlohmann::ordered_json;

inline json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(exact::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::to_string(m.rows())}, {"cols", std::to_string(m.cols())}, {"entries", std::move(rows)}};
}

inline RationalMatrix matrix_from_json(const json& j) {
  const std::size_t r = std::stoul(j.at("rows").get<std::string>()), c = std::stoul(j.at("cols").get<std::string>());
  RationalMatrix m(r, c);
  const auto& e = j.at("entries");
  if (e.size() != r) throw std::runtime_error("matrix row count mismatch");
  for (std::size_t i = 0; i < r; ++i) {
    if (e[i].size() != c) throw std::runtime_error("matrix column count mismatch");
    for (std::size_t k = 0; k < c; ++k) {
      Rational v(e[i][k].get<std::string>());
      v.canonicalize();
      m(i, k) = v;
    }
  }
  return m;
}

inline json poly_to_json(const IntPolynomial& p) {
  json c = json::array();
  for (const auto& v : p.coefficients()) c.push_back(v.get_str());
  return c;
}

inline IntPolynomial poly_from_json(const json& j) {
  std::vector<exact::BigInt> c;
  for (const auto& v : j) c.emplace_back(v.get<std::string>());
  return IntPolynomial(std::move(c));
}

/// What is kept of a symbol space: its shape and the Hecke matrices asked for.
struct SymbolSpaceSnapshot {
  Int level = 0;
  std::size_t dimension = 0;
  std::size_t cuspidal_dimension = 0;
  std::size_t cusp_count = 0;
  std::vector<std::size_t> basis_symbols;
  std::map<Int, RationalMatrix> hecke;

  friend bool operator==(const SymbolSpaceSnapshot&, const SymbolSpaceSnapshot&) = default;
};

inline SymbolSpaceSnapshot snapshot(const modsym::SymbolSpace& s, const std::vector<Int>& primes) {
  SymbolSpaceSnapshot out;
  out.level = s.level();
  out.dimension = s.dimension();
  out.cuspidal_dimension = modsym::cuspidal_subspace(s).cols();
  out.cusp_count = s.cusps().size();
  out.basis_symbols = s.basis_symbols();
  for (Int p : primes) out.hecke.emplace(p, modsym::hecke_operator(s, p).matrix);
  return out;
}

inline std::string serialize(const SymbolSpaceSnapshot& s) {
  json j;
  j["level"] = std::to_string(s.level);
  j["dimension"] = std::to_string(s.dimension);
  j["cuspidal_dimension"] = std::to_string(s.cuspidal_dimension);
  j["cusp_count"] = std::to_string(s.cusp_count);
  json basis = json::array();
  for (auto b : s.basis_symbols) basis.push_back(std::to_string(b));
  j["basis_symbols"] = std::move(basis);
  json hecke = json::object();
  for (const auto& [p, m] : s.hecke) hecke[std::to_string(p)] = matrix_to_json(m);
  j["hecke"] = std::move(hecke);
  return j.dump();
}

inline SymbolSpaceSnapshot deserialize_snapshot(const std::string& text) {
  auto j = json::parse(text);
  SymbolSpaceSnapshot s;
  s.level = std::stoll(j.at("level").get<std::string>());
  s.dimension = std::stoul(j.at("dimension").get<std::string>());
  s.cuspidal_dimension = std::stoul(j.at("cuspidal_dimension").get<std::string>());
  s.cusp_count = std::stoul(j.at("cusp_count").get<std::string>());
  for (const auto& b : j.at("basis_symbols")) s.basis_symbols.push_back(std::stoul(b.get<std::string>()));
  for (const auto& [p, m] : j.at("hecke").items()) s.hecke.emplace(std::stoll(p), matrix_from_json(m));
  return s;
}

/// A decomposition row with flags, without the bases.
struct FactorSummary {
  Int new_level = 0;
  int dimension = 0;
  int multiplicity = 0;
  std::vector<std::pair<Int, IntPolynomial>> fingerprint;
  bool l_nonzero = false;

  friend bool operator==(const FactorSummary&, const FactorSummary&) = default;
};

struct LevelSummary {
  Int level = 0;
  std::vector<FactorSummary> factors;  // grouped, canonical order

  bool finite() const {
    for (const auto& f : factors)
      if (!f.l_nonzero) return false;
    return true;
  }
  int genus() const {
    int g = 0;
    for (const auto& f : factors) g += f.dimension * f.multiplicity;
    return g;
  }
  std::vector<int> flattened_dimensions() const {
    std::vector<int> out;
    for (const auto& f : factors)
      for (int k = 0; k < f.multiplicity; ++k) out.push_back(f.dimension);
    return out;
  }
  std::vector<bool> flattened_flags() const {
    std::vector<bool> out;
    for (const auto& f : factors)
      for (int k = 0; k < f.multiplicity; ++k) out.push_back(f.l_nonzero);
    return out;
  }

  friend bool operator==(const LevelSummary&, const LevelSummary&) = default;
};

inline LevelSummary summarize(const lvalues::FinitenessResult& r) {
  LevelSummary s;
  s.level = r.decomposition.level;
  for (std::size_t i = 0; i < r.decomposition.factors.size(); ++i) {
    const auto& f = r.decomposition.factors[i];
    FactorSummary fs{f.new_level, f.dimension, f.multiplicity, {}, r.flags[i].nonzero()};
    for (const auto& e : f.fingerprint) fs.fingerprint.emplace_back(e.prime, e.minpoly);
    s.factors.push_back(std::move(fs));
  }
  return s;
}

inline json to_json(const LevelSummary& s) {
  json j;
  j["level"] = std::to_string(s.level);
  json factors = json::array();
  for (const auto& f : s.factors) {
    json fj;
    fj["new_level"] = std::to_string(f.new_level);
    fj["dimension"] = std::to_string(f.dimension);
    fj["multiplicity"] = std::to_string(f.multiplicity);
    json fp = json::array();
    for (const auto& [p, poly] : f.fingerprint) fp.push_back(json{{"prime", std::to_string(p)}, {"minpoly", poly_to_json(poly)}});
    fj["fingerprint"] = std::move(fp);
    fj["l_nonzero"] = f.l_nonzero ? "T" : "F";
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  return j;
}

inline LevelSummary level_summary_from_json(const json& j) {
  LevelSummary s;
  s.level = std::stoll(j.at("level").get<std::string>());
  for (const auto& fj : j.at("factors")) {
    FactorSummary f;
    f.new_level = std::stoll(fj.at("new_level").get<std::string>());
    f.dimension = std::stoi(fj.at("dimension").get<std::string>());
    f.multiplicity = std::stoi(fj.at("multiplicity").get<std::string>());
    for (const auto& e : fj.at("fingerprint"))
      f.fingerprint.emplace_back(std::stoll(e.at("prime").get<std::string>()), poly_from_json(e.at("minpoly")));
    const auto flag = fj.at("l_nonzero").get<std::string>();
    if (flag != "T" && flag != "F") throw std::runtime_error("bad flag in level summary");
    f.l_nonzero = flag == "T";
    s.factors.push_back(std::move(f));
  }
  return s;
}

/// Decomposition with flags for level N, read from the cache when a valid
/// entry exists and stored after computing otherwise.
inline LevelSummary level_summary(Int n, const Cache& cache) {
  const CacheKey key{n, "level-summary", kCacheFormatVersion};
  if (auto hit = cache.get(key)) {
    try {
      auto s = level_summary_from_json(json::parse(hit->payload));
      if (s.level == n) return s;
    } catch (const std::exception&) {
      // fall through and recompute
    }
  }
  auto s = summarize(lvalues::finiteness_flag(n));
  cache.put(key, to_json(s).dump());
  return s;
}

}  // namespace modcurve::pipeline
