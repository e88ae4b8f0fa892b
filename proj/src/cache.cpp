#include "orderone/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace orderone {
namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Keys become file names: anything outside [A-Za-z0-9._-] is replaced.
std::string file_stem(const std::string& key) {
  std::string out;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                    c == '_' || c == '-';
    out.push_back(ok ? c : '_');
  }
  return out + "-" + hex64(fnv1a64(key)).substr(0, 8);
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json cache_envelope(const std::string& key, const Json& payload) {
  return Json{{"schema", kSchemaVersion},
              {"key", key},
              {"checksum", hex64(fnv1a64(canonical_dump(payload)))},
              {"payload", payload}};
}

std::optional<Json> open_envelope(const std::string& key, const Json& body) {
  if (!body.is_object() || !body.contains("payload")) return std::nullopt;
  if (body.value("schema", -1) != kSchemaVersion) return std::nullopt;
  if (body.value("key", std::string()) != key) return std::nullopt;
  const Json& payload = body.at("payload");
  if (body.value("checksum", std::string()) != hex64(fnv1a64(canonical_dump(payload)))) return std::nullopt;
  return payload;
}

ResultCache ResultCache::disabled() { return ResultCache(); }

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

std::filesystem::path ResultCache::default_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "orderone";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "orderone";
  return std::filesystem::temp_directory_path() / "orderone-cache";
}

std::filesystem::path ResultCache::path_for(const std::string& key) const { return dir_ / (file_stem(key) + ".json"); }

std::optional<Json> ResultCache::load(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  const Json body = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded()) return std::nullopt;
  return open_envelope(key, body);
}

void ResultCache::store(const std::string& key, const Json& payload) const {
  if (!enabled_) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;  // caching is best effort
  const auto target = path_for(key);
  std::ostringstream tag;
  tag << ::getpid() << "." << std::this_thread::get_id();
  const auto tmp = target.string() + ".tmp" + tag.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << cache_envelope(key, payload).dump() << '\n';
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

Json ResultCache::get_or_compute(const std::string& key, const std::function<Json()>& compute) const {
  if (auto hit = load(key)) return *hit;
  Json value = compute();
  store(key, value);
  return value;
}

}  // namespace orderone
