#include "hwp/solution_cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "hwp/certificate.hpp"
#include "hwp/errors.hpp"

namespace hwp {
namespace {

constexpr const char* kSuffix = ".cert";

void warn(const std::string& msg) { std::cerr << "hwp: cache: " << msg << "\n"; }

}  // namespace

SolutionCache::SolutionCache(std::filesystem::path dir, int version)
    : dir_(std::move(dir)), version_(version) {}

std::filesystem::path SolutionCache::default_dir() {
  if (const char* env = std::getenv("HWP_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "hwp";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "hwp";
  }
  return std::filesystem::temp_directory_path() / "hwp-cache";
}

std::string SolutionCache::make_key(int m, int n, const std::string& multiset, const std::string& kind,
                                    std::uint64_t seed) {
  std::ostringstream os;
  os << kind << "-m" << m << "-n" << n << "-s" << std::hex << seed << std::dec << "-{" << multiset << "}";
  return os.str();
}

std::filesystem::path SolutionCache::path_for(const std::string& key) const { return dir_ / (key + kSuffix); }

std::optional<Decomposition> SolutionCache::lookup(const std::string& key, const Validator& accept) const {
  const auto path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string tag;
  int version = -1;
  if (!(hs >> tag >> version) || tag != "solver-version") {
    warn("ignoring " + path.string() + ": missing solver-version header");
    return std::nullopt;
  }
  if (version != version_) return std::nullopt;
  std::stringstream body;
  body << in.rdbuf();
  try {
    Decomposition d = parse_certificate(body.str());
    if (Report r = verify_decomposition(d); !r) {
      warn("ignoring " + path.string() + ": " + r.message);
      return std::nullopt;
    }
    if (accept && !accept(d)) {
      warn("ignoring " + path.string() + ": entry does not match its key");
      return std::nullopt;
    }
    return d;
  } catch (const Error& e) {
    warn("ignoring " + path.string() + ": " + e.what());
    return std::nullopt;
  }
}

void SolutionCache::store(const std::string& key, const Decomposition& d) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    warn("cannot create " + dir_.string() + ": " + ec.message());
    return;
  }
  const auto target = path_for(key);
  std::ostringstream suffix;
  suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
         << std::random_device{}();
  const auto tmp = std::filesystem::path(target.string() + suffix.str());
  {
    std::ofstream out(tmp);
    out << "solver-version " << version_ << "\n" << serialize_certificate(d);
    if (!out) {
      warn("cannot write " + tmp.string());
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    warn("cannot rename into " + target.string() + ": " + ec.message());
    std::filesystem::remove(tmp, ec);
  }
}

std::vector<std::string> SolutionCache::list() const {
  std::vector<std::string> keys;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == kSuffix) {
      keys.push_back(name.substr(0, name.size() - std::string(kSuffix).size()));
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::size_t SolutionCache::clear() const {
  std::size_t removed = 0;
  for (const auto& key : list()) {
    std::error_code ec;
    if (std::filesystem::remove(path_for(key), ec)) ++removed;
  }
  return removed;
}

}  // namespace hwp
