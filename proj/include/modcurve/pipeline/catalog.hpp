#pragma once

#include "modcurve/arith.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace modcurve::pipeline {

enum class LevelStatus { proved_part_one, proved_part_two, proved_here, open };

inline std::string to_string(LevelStatus s) {
  switch (s) {
    case LevelStatus::proved_part_one: return "proved-part-I";
    case LevelStatus::proved_part_two: return "proved-part-II";
    case LevelStatus::proved_here: return "proved-here";
    case LevelStatus::open: return "open";
  }
  return "?";
}

struct CatalogEntry {
  Int level;
  LevelStatus status;
};

/// The 24 levels N for which Z/NZ as cubic torsion was not yet excluded.
inline const std::vector<CatalogEntry>& level_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    for (Int n : {22, 24, 25, 26, 27, 28, 30, 32, 33, 35, 36, 39, 40, 42, 45, 49, 55, 63, 65, 77, 91, 121, 143, 169}) {
      LevelStatus s = LevelStatus::open;
      if (n == 55 || n == 65 || n == 77 || n == 91 || n == 143 || n == 169) s = LevelStatus::proved_part_one;
      if (n == 22 || n == 25 || n == 40 || n == 49) s = LevelStatus::proved_part_two;
      if (n == 39) s = LevelStatus::proved_here;
      e.push_back({n, s});
    }
    return e;
  }();
  return entries;
}

inline std::optional<CatalogEntry> find_level(Int n) {
  const auto& c = level_catalog();
  auto it = std::find_if(c.begin(), c.end(), [n](const CatalogEntry& e) { return e.level == n; });
  if (it == c.end()) return std::nullopt;
  return *it;
}

}  // namespace modcurve::pipeline
