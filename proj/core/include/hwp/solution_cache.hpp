#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hwp/factor.hpp"

namespace hwp {

/// Directory of verified solver outputs, one certificate file per key with a
/// `solver-version <int>` header line. Safe for concurrent readers; writes are
/// atomic (temp file + rename), last writer wins.
class SolutionCache {
 public:
  static constexpr int kSolverVersion = 1;

  explicit SolutionCache(std::filesystem::path dir, int version = kSolverVersion);

  /// $HWP_CACHE_DIR, else $XDG_CACHE_HOME/hwp, else ~/.cache/hwp.
  static std::filesystem::path default_dir();

  static std::string make_key(int m, int n, const std::string& multiset, const std::string& kind,
                              std::uint64_t seed);

  using Validator = std::function<bool(const Decomposition&)>;

  /// Missing, stale, unparsable or rejected entries are misses; the last
  /// three also print a warning to stderr.
  std::optional<Decomposition> lookup(const std::string& key, const Validator& accept = {}) const;
  void store(const std::string& key, const Decomposition& d) const;

  std::vector<std::string> list() const;
  std::size_t clear() const;

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  int version_;
};

}  // namespace hwp
