#pragma once

#include "modcurve/cuspidal/order.hpp"
#include "modcurve/pipeline/catalog.hpp"
#include "modcurve/pipeline/serialize.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace modcurve::pipeline {

struct Table1Row {
  Int level = 0;
  exact::BigInt expected;
  std::string expected_factored;
  exact::BigInt computed;
  std::string computed_factored;
  bool pass = false;
  std::string error;
};

inline std::vector<Table1Row> reproduce_table1() {
  struct Expected {
    Int n;
    long value;
    const char* factored;
  };
  static const Expected rows[] = {{26, 21, "3*7"},        {30, 192, "2^6*3"}, {33, 100, "2^2*5^2"},
                                  {35, 48, "2^4*3"},      {39, 56, "2^3*7"},  {42, 2304, "2^8*3^2"}};
  std::vector<Table1Row> out;
  for (const auto& e : rows) {
    Table1Row r;
    r.level = e.n;
    r.expected = e.value;
    r.expected_factored = e.factored;
    try {
      auto h = cuspidal::h0(e.n);
      r.computed = h.value;
      r.computed_factored = cuspidal::factored_string(h.factored);
      r.pass = r.computed == r.expected && r.computed_factored == r.expected_factored;
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct Table2Expected {
  Int level;
  int t;
  std::vector<int> dimensions;
  std::string flags;  // one letter per factor; empty for a genus-0 level
};

/// Expected rows, in the published order.
inline const std::vector<Table2Expected>& table2_expected() {
  static const std::vector<Table2Expected> rows = {
      {169, 3, {2, 3, 3}, "TFT"},
      {121, 6, {1, 1, 1, 1, 1, 1}, "FTTTTT"},
      {49, 1, {1}, "T"},
      {25, 1, {0}, ""},
      {27, 1, {1}, "T"},
      {32, 1, {1}, "T"},
      {143, 5, {1, 4, 6, 1, 1}, "FTTTT"},
      {91, 4, {1, 1, 2, 3}, "FFTT"},
      {65, 3, {1, 2, 2}, "FTT"},
      {39, 2, {1, 2}, "TT"},
      {26, 2, {1, 1}, "TT"},
      {77, 6, {1, 1, 1, 2, 1, 1}, "FTTTTT"},
      {55, 4, {1, 2, 1, 1}, "TTT"},
      {33, 3, {1, 1, 1}, "TTT"},
      {22, 2, {1, 1}, "TT"},
      {35, 2, {1, 2}, "TT"},
      {63, 4, {1, 2, 1, 1}, "TTTT"},
      {42, 5, {1, 1, 1, 1, 1}, "TTTTT"},
      {28, 2, {1, 1}, "TT"},
      {45, 3, {1, 1, 1}, "TTT"},
      {30, 3, {1, 1, 1}, "TTT"},
      {40, 3, {1, 1, 1}, "TTT"},
      {36, 1, {1}, "T"},
      {24, 1, {1}, "T"},
  };
  return rows;
}

struct Table2Row {
  Table2Expected expected;
  int t = 0;
  std::vector<int> dimensions;  // flattened, canonical order
  std::string flags;
  bool pass = false;
  bool lenient = false;  // passed only under the sub-multiset rule
  std::string error;
};

namespace detail {

inline bool sub_multiset(std::string small, std::string big) {
  std::sort(small.begin(), small.end());
  std::sort(big.begin(), big.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

template <class C>
bool same_multiset(C a, C b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace detail

/// One row. A genus-0 level has no factors and is shown as a single entry
/// of dimension 0 with no flag. Row 55 lists three flags for four factors;
/// it passes if the listed flags are a sub-multiset of the computed ones.
inline Table2Row reproduce_table2_row(const Table2Expected& e, const Cache& cache) {
  Table2Row r;
  r.expected = e;
  try {
    auto s = level_summary(e.level, cache);
    r.dimensions = s.flattened_dimensions();
    for (bool f : s.flattened_flags()) r.flags += f ? 'T' : 'F';
    if (r.dimensions.empty()) r.dimensions = {0};
    r.t = static_cast<int>(r.dimensions.size());
    bool shape = r.t == e.t && detail::same_multiset(r.dimensions, e.dimensions);
    if (shape && detail::same_multiset(r.flags, e.flags)) {
      r.pass = true;
    } else if (shape && e.level == 55 && e.flags.size() + 1 == r.flags.size() && detail::sub_multiset(e.flags, r.flags)) {
      r.pass = true;
      r.lenient = true;
    }
  } catch (const std::exception& ex) {
    r.error = ex.what();
  }
  return r;
}

inline std::vector<Table2Row> reproduce_table2(const Cache& cache) {
  std::vector<Table2Row> out;
  for (const auto& e : table2_expected()) out.push_back(reproduce_table2_row(e, cache));
  return out;
}

}  // namespace modcurve::pipeline
