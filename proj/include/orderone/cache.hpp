#pragma once

// A directory of JSON result files. Each file wraps its payload with the
// schema version, the key and an FNV-1a checksum of the canonical payload
// text; a file that fails any of these checks is treated as missing.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "orderone/serialize.hpp"

namespace orderone {

inline constexpr const char* kCacheDirEnv = "ORDERONE_CACHE_DIR";

std::uint64_t fnv1a64(const std::string& text);

class ResultCache {
 public:
  // A disabled cache never reads or writes.
  static ResultCache disabled();
  explicit ResultCache(std::filesystem::path dir);
  // $ORDERONE_CACHE_DIR, else $XDG_CACHE_HOME/orderone, else ~/.cache/orderone.
  static std::filesystem::path default_dir();

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<Json> load(const std::string& key) const;
  // Written to a temporary file and renamed into place, so concurrent readers
  // see either the old file or the complete new one.
  void store(const std::string& key, const Json& payload) const;

  Json get_or_compute(const std::string& key, const std::function<Json()>& compute) const;

  template <typename T>
  T get_or_compute(const std::string& key, const std::function<T()>& compute) const {
    if (auto hit = load(key)) {
      try {
        return hit->get<T>();
      } catch (const std::exception&) {
        // Stale layout: recompute below.
      }
    }
    T value = compute();
    store(key, Json(value));
    return value;
  }

 private:
  ResultCache() = default;
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  bool enabled_ = false;
};

// Wraps a payload as a cache file body and checks one.
Json cache_envelope(const std::string& key, const Json& payload);
std::optional<Json> open_envelope(const std::string& key, const Json& body);

}  // namespace orderone
