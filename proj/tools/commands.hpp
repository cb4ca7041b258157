#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hwp/tables.hpp"

namespace hwp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kUnsupported = 3,
  kTimeout = 4,
  kVerification = 5,
  kParse = 6,
};

struct CacheChoice {
  std::optional<std::filesystem::path> dir;  // unset: SolutionCache::default_dir()
  bool disabled = false;
};

struct GenerateArgs {
  int m = 0;
  int r = 0;
  std::string out;  // empty or "-": stdout
  std::uint64_t seed = 0x5eed;
  CacheChoice cache;
};

struct SweepArgs {
  std::vector<int> ms;
  std::vector<int> rs;
  std::filesystem::path out_dir;
  int jobs = 1;
  std::uint64_t seed = 0x5eed;
  CacheChoice cache;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_selftest_tables(std::ostream& out, std::ostream& err);
int cmd_selftest_tables(const MatchingTable& i_table, const MatchingTable& iprime_table, std::ostream& out,
                        std::ostream& err);
int cmd_cache_list(const CacheChoice& cache, std::ostream& out, std::ostream& err);
int cmd_cache_clear(const CacheChoice& cache, std::ostream& out, std::ostream& err);

/// "9,11,13" or "7..23" or a mix ("7..9,12"). Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

/// Writes via a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Certificate file name used by sweep, e.g. "hwp-m9-r14.cert".
std::string certificate_name(int m, int r);

}  // namespace hwp::cli
