#pragma once

#include "modcurve/arith.hpp"
#include "modcurve/geometry/curve.hpp"
#include "modcurve/geometry/points.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef MODCURVE_DEFAULT_GONALITY_TABLE
#define MODCURVE_DEFAULT_GONALITY_TABLE "data/gonality.txt"
#endif

namespace modcurve::geometry {

enum class GonalityKind { hyperelliptic, trigonal };

struct GonalityRecord {
  GonalityKind kind;
  std::string source;
};

/// Records `N kind source-tag`, `#` starts a comment. A level may carry
/// both kinds only in principle; the shipped table never does.
class GonalityTable {
 public:
  static GonalityTable parse(std::istream& in) {
    GonalityTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::string n_text, kind, source, extra;
      if (!(fields >> n_text)) continue;
      if (!(fields >> kind >> source) || (fields >> extra))
        throw std::runtime_error("gonality table line " + std::to_string(lineno) + ": expected `N kind source-tag`");
      Int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoll(n_text, &used);
        if (used != n_text.size() || n < 1) throw std::invalid_argument(n_text);
      } catch (const std::exception&) {
        throw std::runtime_error("gonality table line " + std::to_string(lineno) + ": bad level `" + n_text + "`");
      }
      GonalityKind k;
      if (kind == "hyperelliptic")
        k = GonalityKind::hyperelliptic;
      else if (kind == "trigonal")
        k = GonalityKind::trigonal;
      else
        throw std::runtime_error("gonality table line " + std::to_string(lineno) + ": unknown kind `" + kind + "`");
      t.records_[n].emplace(k, GonalityRecord{k, source});
    }
    return t;
  }

  static GonalityTable load(const std::string& path = MODCURVE_DEFAULT_GONALITY_TABLE) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gonality table " + path);
    return parse(in);
  }

  const GonalityRecord* find(Int n, GonalityKind k) const {
    auto it = records_.find(n);
    if (it == records_.end()) return nullptr;
    auto jt = it->second.find(k);
    return jt == it->second.end() ? nullptr : &jt->second;
  }

 private:
  std::map<Int, std::map<GonalityKind, GonalityRecord>> records_;
};

enum class GonalityClaim { rational, hyperelliptic, trigonal, not_trigonal, inconclusive };
enum class GonalityEvidence { genus_bound, curated_table, point_count_bound, none };

inline std::string to_string(GonalityClaim c) {
  switch (c) {
    case GonalityClaim::rational: return "rational";
    case GonalityClaim::hyperelliptic: return "hyperelliptic";
    case GonalityClaim::trigonal: return "trigonal";
    case GonalityClaim::not_trigonal: return "not-trigonal";
    case GonalityClaim::inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string to_string(GonalityEvidence e) {
  switch (e) {
    case GonalityEvidence::genus_bound: return "genus-bound";
    case GonalityEvidence::curated_table: return "curated-table";
    case GonalityEvidence::point_count_bound: return "point-count-bound";
    case GonalityEvidence::none: return "none";
  }
  return "?";
}

struct PointCountWitness {
  Int p = 0;
  Int r = 0;
  BigInt q;
  BigInt count;  // > 3 (q + 1)
};

struct GonalityCertificate {
  Int level = 0;
  Int genus = 0;
  GonalityClaim claim = GonalityClaim::inconclusive;
  GonalityEvidence evidence = GonalityEvidence::none;
  std::string source;                  // curated source tag, if any
  std::optional<bool> hyperelliptic;   // unknown when neither genus nor table decides
  std::optional<PointCountWitness> witness;
};

/// A degree-d map to P^1 over Q reduces to one over F_q, so #X(F_q) <= d (q + 1).
inline std::optional<PointCountWitness> trigonal_obstruction(Int n, Int max_prime = 13, Int max_r = 3) {
  for (Int p : primes_up_to(max_prime)) {
    if (n % p == 0) continue;
    for (Int r = 1; r <= max_r; ++r) {
      BigInt q = exact::pow(BigInt(p), static_cast<unsigned long>(r));
      BigInt count = point_count(n, p, r);
      if (count > 3 * (q + 1)) return PointCountWitness{p, r, q, count};
    }
  }
  return std::nullopt;
}

inline GonalityCertificate gonality_certificate(Int n, const GonalityTable* table, bool try_point_counts = true) {
  GonalityCertificate c;
  c.level = n;
  c.genus = genus(n);
  if (c.genus == 0) {
    c.claim = GonalityClaim::rational;
    c.evidence = GonalityEvidence::genus_bound;
    c.hyperelliptic = false;
    return c;
  }
  if (c.genus <= 2) {
    c.claim = GonalityClaim::hyperelliptic;
    c.evidence = GonalityEvidence::genus_bound;
    c.hyperelliptic = true;
    return c;
  }
  if (try_point_counts) c.witness = trigonal_obstruction(n);
  if (table) {
    const auto* hyp = table->find(n, GonalityKind::hyperelliptic);
    const auto* tri = table->find(n, GonalityKind::trigonal);
    c.hyperelliptic = hyp != nullptr;
    if (tri) {
      if (c.witness) throw std::logic_error("curated table says trigonal but point counts forbid it");
      c.claim = GonalityClaim::trigonal;
      c.evidence = GonalityEvidence::curated_table;
      c.source = tri->source;
      return c;
    }
    c.claim = GonalityClaim::not_trigonal;
    c.evidence = GonalityEvidence::curated_table;
    if (hyp) c.source = hyp->source;
    return c;
  }
  if (c.witness) {
    c.claim = GonalityClaim::not_trigonal;
    c.evidence = GonalityEvidence::point_count_bound;
  }
  return c;
}

inline GonalityCertificate gonality_certificate(Int n) {
  GonalityTable table = GonalityTable::load();
  return gonality_certificate(n, &table);
}

}  // namespace modcurve::geometry
