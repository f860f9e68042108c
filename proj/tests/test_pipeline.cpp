#include "modcurve/pipeline/cache.hpp"
#include "modcurve/pipeline/catalog.hpp"
#include "modcurve/pipeline/criterion.hpp"
#include "modcurve/pipeline/serialize.hpp"
#include "modcurve/pipeline/tables.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace modcurve;
using namespace modcurve::pipeline;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("modcurve-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// every leaf of a report is a string
bool only_strings(const nlohmann::ordered_json& j) {
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j)
      if (!only_strings(v)) return false;
    return true;
  }
  return j.is_string();
}

}  // namespace

TEST(Catalog, Statuses) {
  EXPECT_EQ(level_catalog().size(), 24u);
  int part1 = 0, part2 = 0, here = 0;
  for (const auto& e : level_catalog()) {
    part1 += e.status == LevelStatus::proved_part_one;
    part2 += e.status == LevelStatus::proved_part_two;
    here += e.status == LevelStatus::proved_here;
  }
  EXPECT_EQ(part1, 6);
  EXPECT_EQ(part2, 4);
  EXPECT_EQ(here, 1);
  EXPECT_EQ(find_level(39)->status, LevelStatus::proved_here);
  EXPECT_EQ(find_level(169)->status, LevelStatus::proved_part_one);
  EXPECT_EQ(find_level(25)->status, LevelStatus::proved_part_two);
  EXPECT_EQ(find_level(26)->status, LevelStatus::open);
  EXPECT_FALSE(find_level(37).has_value());
}

TEST(Criterion, Level39Prime3IsEliminated) {
  auto rep = evaluate_criterion(39, 3);
  ASSERT_EQ(rep.conditions.size(), 7u);
  EXPECT_EQ(rep.verdict, FinalVerdict::eliminated);
  EXPECT_TRUE(rep.failed().empty());
  auto input = [](const ConditionRecord& c, const std::string& k) {
    for (const auto& [key, v] : c.inputs)
      if (key == k) return v;
    return std::string("<missing>");
  };
  const auto& c2 = rep.condition("C2");
  EXPECT_EQ(input(c2, "(tested-1-q)^2"), "121");
  EXPECT_EQ(input(c2, "4q"), "108");
  const auto& c3 = rep.condition("C3");
  EXPECT_EQ(input(c3, "tested"), "13");
  EXPECT_EQ(input(c3, "(tested-1-q)^2"), "81");
  EXPECT_EQ(input(c3, "4q"), "12");
  const auto& c4 = rep.condition("C4");
  EXPECT_EQ(input(c4, "h0"), "56");
  EXPECT_EQ(input(c4, "h0 factored"), "2^3*7");
  EXPECT_EQ(input(c4, "gcd(h0,p)"), "1");
  EXPECT_EQ(input(rep.condition("C6"), "L(A,1)!=0"), "T,T");
  EXPECT_EQ(input(rep.condition("C7"), "claim"), "not-trigonal");
  for (const auto& c : rep.conditions) EXPECT_FALSE(c.paper_anchor.empty()) << c.name;
}

TEST(Criterion, NegativeControls) {
  auto a = evaluate_criterion(39, 13);
  EXPECT_EQ(a.verdict, FinalVerdict::not_established);
  EXPECT_EQ(a.condition("C2").verdict, ConditionVerdict::fail);
  auto b = evaluate_criterion(91, 3);
  EXPECT_EQ(b.verdict, FinalVerdict::not_established);
  EXPECT_EQ(b.condition("C6").verdict, ConditionVerdict::fail);
  // 3 does not divide 91, so the residue-degree-1 branch cannot run
  EXPECT_EQ(b.condition("C3").verdict, ConditionVerdict::error);
}

TEST(Criterion, LevelsWithVanishingLValuesFailC6) {
  for (Int n : {65, 77, 91, 121, 143, 169}) {
    auto rep = evaluate_criterion(n, 3);
    EXPECT_EQ(rep.condition("C6").verdict, ConditionVerdict::fail) << n;
    EXPECT_EQ(rep.verdict, FinalVerdict::not_established) << n;
  }
}

TEST(Criterion, NonSquarefreeLevelMarksC4Unavailable) {
  auto rep = evaluate_criterion(49, 7);
  EXPECT_EQ(rep.condition("C4").verdict, ConditionVerdict::unavailable);
  EXPECT_EQ(rep.verdict, FinalVerdict::not_established);
}

TEST(Criterion, Preconditions) {
  EXPECT_THROW(evaluate_criterion(37, 3), std::invalid_argument);
  EXPECT_THROW(evaluate_criterion(39, 9), std::invalid_argument);
}

TEST(Report, DeterministicAndStringly) {
  auto a = to_json(evaluate_criterion(39, 3)).dump(2);
  auto b = to_json(evaluate_criterion(39, 3)).dump(2);
  EXPECT_EQ(a, b);
  auto j = nlohmann::ordered_json::parse(a);
  EXPECT_TRUE(only_strings(j));
  EXPECT_EQ(j["version"], kReportVersion);
  EXPECT_EQ(j["level"], "39");
  EXPECT_EQ(j["verdict"], "eliminated");
  ASSERT_EQ(j["conditions"].size(), 7u);
  for (const auto& c : j["conditions"])
    for (const char* key : {"name", "inputs", "verdict", "paper_anchor"}) EXPECT_TRUE(c.contains(key)) << key;
}

TEST(Cache, SymbolSpaceRoundTrip) {
  TempDir dir;
  Cache cache(dir.path());
  ASSERT_TRUE(cache.enabled());
  modsym::SymbolSpace s(39);
  auto snap = snapshot(s, {2, 5, 7});
  const CacheKey key{39, "symbol-space"};
  ASSERT_TRUE(cache.put(key, serialize(snap)));
  auto hit = cache.get(key);
  ASSERT_TRUE(hit.has_value());
  auto back = deserialize_snapshot(hit->payload);
  EXPECT_EQ(back, snap);
  EXPECT_EQ(back.dimension, 9u);
  EXPECT_EQ(back.cuspidal_dimension, 6u);
  EXPECT_EQ(back.hecke.at(2), modsym::hecke_operator(s, 2).matrix);
}

TEST(Cache, RationalEntriesSurvive) {
  exact::RationalMatrix m{{exact::make_rational(-3, 7), 0}, {5, exact::make_rational(1, 2)}};
  auto text = matrix_to_json(m).dump();
  EXPECT_EQ(matrix_from_json(nlohmann::ordered_json::parse(text)), m);
}

TEST(Cache, CorruptedEntryIsAMiss) {
  TempDir dir;
  Cache cache(dir.path());
  const CacheKey key{11, "level-summary"};
  auto s = level_summary(11, cache);
  ASSERT_TRUE(cache.get(key).has_value());
  // flip a byte inside the payload
  auto path = cache.path_for(key);
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  auto pos = text.find("\\\"11\\\"");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 3] = '7';
  {
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  EXPECT_FALSE(cache.get(key).has_value());
  // recomputed and overwritten
  EXPECT_EQ(level_summary(11, cache), s);
  EXPECT_TRUE(cache.get(key).has_value());
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{ not json";
  }
  EXPECT_FALSE(cache.get(key).has_value());
}

TEST(Cache, VersionBumpInvalidates) {
  TempDir dir;
  Cache cache(dir.path());
  ASSERT_TRUE(cache.put({39, "level-summary", kCacheFormatVersion}, "{}"));
  EXPECT_TRUE(cache.get({39, "level-summary", kCacheFormatVersion}).has_value());
  EXPECT_FALSE(cache.get({39, "level-summary", kCacheFormatVersion + 1}).has_value());
  EXPECT_FALSE(cache.get({39, "other-kind", kCacheFormatVersion}).has_value());
}

TEST(Cache, UnwritableDirectoryDegrades) {
  TempDir dir;
  auto blocker = dir.path() / "file";
  { std::ofstream(blocker) << "x"; }
  std::ostringstream warnings;
  Cache cache(blocker / "sub", &warnings);
  EXPECT_FALSE(cache.enabled());
  EXPECT_NE(warnings.str().find("not writable"), std::string::npos);
  EXPECT_FALSE(cache.put({39, "level-summary"}, "{}"));
  EXPECT_FALSE(cache.get({39, "level-summary"}).has_value());
  // still computes
  EXPECT_TRUE(level_summary(39, cache).finite());
}

TEST(Cache, EnvironmentSwitches) {
  TempDir dir;
  ::setenv("MODCURVE_CACHE_DIR", dir.path().c_str(), 1);
  ::setenv("MODCURVE_NO_CACHE", "1", 1);
  EXPECT_FALSE(Cache::from_environment().enabled());
  ::unsetenv("MODCURVE_NO_CACHE");
  auto c = Cache::from_environment();
  EXPECT_TRUE(c.enabled());
  EXPECT_EQ(*c.directory(), dir.path());
  ::unsetenv("MODCURVE_CACHE_DIR");
}

TEST(Cache, ChecksumIsFnv1a) {
  EXPECT_EQ(fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64("a"), "af63dc4c8601ec8c");
}

TEST(LevelSummary, JsonRoundTripAndCachedEqualsFresh) {
  TempDir dir;
  Cache cache(dir.path());
  auto fresh = level_summary(91, Cache());
  auto stored = level_summary(91, cache);
  auto again = level_summary(91, cache);
  EXPECT_EQ(fresh, stored);
  EXPECT_EQ(stored, again);
  EXPECT_EQ(level_summary_from_json(to_json(fresh)), fresh);
  EXPECT_EQ(fresh.genus(), 7);
}

TEST(Tables, TableOne) {
  auto rows = reproduce_table1();
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.level;
}

TEST(Tables, TableTwo) {
  auto rows = reproduce_table2(Cache());
  ASSERT_EQ(rows.size(), 24u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.pass) << r.expected.level << " " << r.flags << " " << r.error;
    EXPECT_EQ(r.lenient, r.expected.level == 55) << r.expected.level;
  }
  auto row25 = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.expected.level == 25; });
  EXPECT_EQ(row25->dimensions, (std::vector<int>{0}));
  EXPECT_TRUE(row25->flags.empty());
}

TEST(Tables, MismatchIsReported) {
  Table2Expected wrong{39, 2, {1, 2}, "TF"};
  EXPECT_FALSE(reproduce_table2_row(wrong, Cache()).pass);
  Table2Expected wrong55{55, 4, {1, 2, 1, 1}, "TTF"};
  EXPECT_FALSE(reproduce_table2_row(wrong55, Cache()).pass);
}
