#pragma once

// On-disk cache of computed artifacts, one JSON file per (level, kind).
// Writers go through a temporary file and rename; readers validate the
// checksum and format version and treat anything else as a miss.

#include "modcurve/arith.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>

namespace modcurve::pipeline {

inline constexpr int kCacheFormatVersion = 1;

struct CacheKey {
  Int level = 0;
  std::string kind;
  int version = kCacheFormatVersion;
};

struct CacheEntry {
  CacheKey key;
  std::string payload;
  std::string checksum;
};

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Cache {
 public:
  /// Disabled cache: every get misses, every put is dropped.
  Cache() = default;

  explicit Cache(std::filesystem::path dir, std::ostream* warnings = &std::cerr) : warn_(warnings) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !probe_writable(dir)) {
      warn("cache directory " + dir.string() + " is not writable; continuing without a cache");
      return;
    }
    dir_ = std::move(dir);
  }

  /// MODCURVE_NO_CACHE=1 disables; MODCURVE_CACHE_DIR overrides the
  /// default of $XDG_CACHE_HOME/modcurve or ~/.cache/modcurve.
  static Cache from_environment(std::ostream* warnings = &std::cerr) {
    if (const char* off = std::getenv("MODCURVE_NO_CACHE"); off && std::string(off) == "1") return Cache();
    if (const char* d = std::getenv("MODCURVE_CACHE_DIR"); d && *d) return Cache(d, warnings);
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return Cache(std::filesystem::path(x) / "modcurve", warnings);
    if (const char* h = std::getenv("HOME"); h && *h)
      return Cache(std::filesystem::path(h) / ".cache" / "modcurve", warnings);
    return Cache();
  }

  bool enabled() const { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  std::filesystem::path path_for(const CacheKey& key) const {
    return *dir_ / (key.kind + "-" + std::to_string(key.level) + ".json");
  }

  std::optional<CacheEntry> get(const CacheKey& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto j = nlohmann::json::parse(buf.str());
      CacheEntry e;
      e.key.level = j.at("level").get<Int>();
      e.key.kind = j.at("kind").get<std::string>();
      e.key.version = j.at("version").get<int>();
      e.payload = j.at("payload").get<std::string>();
      e.checksum = j.at("checksum").get<std::string>();
      if (e.key.level != key.level || e.key.kind != key.kind || e.key.version != key.version) return std::nullopt;
      if (fnv1a64(e.payload) != e.checksum) return std::nullopt;
      return e;
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;
    }
  }

  /// Returns false when the entry could not be stored; the cache stays usable.
  bool put(const CacheKey& key, const std::string& payload) const {
    if (!enabled()) return false;
    nlohmann::ordered_json j;
    j["level"] = key.level;
    j["kind"] = key.kind;
    j["version"] = key.version;
    j["checksum"] = fnv1a64(payload);
    j["payload"] = payload;
    const auto target = path_for(key);
    static std::atomic<unsigned> counter{0};
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << j.dump();
      if (!out) {
        warn("failed to write cache entry " + tmp.string());
        return false;
      }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      warn("failed to publish cache entry " + target.string());
      return false;
    }
    return true;
  }

 private:
  static bool probe_writable(const std::filesystem::path& dir) {
    auto probe = dir / (".probe." + std::to_string(::getpid()));
    {
      std::ofstream out(probe);
      if (!out) return false;
    }
    std::error_code ec;
    std::filesystem::remove(probe, ec);
    return true;
  }

  void warn(const std::string& msg) const {
    if (warn_) *warn_ << "modcurve: warning: " << msg << "\n";
  }

  std::optional<std::filesystem::path> dir_;
  std::ostream* warn_ = &std::cerr;
};

}  // namespace modcurve::pipeline
