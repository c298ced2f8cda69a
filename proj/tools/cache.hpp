#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace sdw::cli {

// Content-addressed store of canonical JSON documents, one file per key.
class SeriesCache {
public:
  explicit SeriesCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  static std::string key(const std::string& descriptor);  // hex SHA-256

  bool enabled() const { return dir_.has_value(); }
  std::optional<std::string> load(const std::string& key) const;
  // Written to a temporary file first and renamed into place.
  void store(const std::string& key, const std::string& content) const;

private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace sdw::cli
