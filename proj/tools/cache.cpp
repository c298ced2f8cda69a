#include "cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sdw::cli {

std::string SeriesCache::key(const std::string& descriptor) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!EVP_Digest(descriptor.data(), descriptor.size(), md.data(), &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::optional<std::string> SeriesCache::load(const std::string& key) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(*dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void SeriesCache::store(const std::string& key, const std::string& content) const {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  std::random_device rd;
  auto tmp = *dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, *dir_ / (key + ".json"));
}

}  // namespace sdw::cli
