#pragma once

// File-per-key result cache with atomic writes.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

namespace wml {

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const { return dir_; }

  /// FNV-1a of the full key; the key itself is stored on the first line.
  std::filesystem::path path_for(const std::string& key) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : key) h = (h ^ c) * 1099511628211ULL;
    std::ostringstream name;
    name << std::hex << h << ".json";
    return dir_ / name.str();
  }

  std::optional<std::string> get(const std::string& key) const {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string stored;
    std::getline(in, stored);
    if (stored != key) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
  }

  /// Writes to a unique temporary file in the same directory, then renames.
  void put(const std::string& key, const std::string& payload) const {
    if (key.find('\n') != std::string::npos) throw std::invalid_argument("cache key contains a newline");
    std::filesystem::create_directories(dir_);
    const auto target = path_for(key);
    std::random_device rd;
    const auto tmp = dir_ / (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
      out << key << '\n' << payload;
      out.flush();
      if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace wml
