#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/graph.hpp"

namespace hwp::test {

// Checker written against plain std::set so it shares nothing with the
// library's verifier beyond the factor data itself.
struct NaiveResult {
  bool ok = true;
  std::string why;
};

using PlainEdge = std::pair<std::pair<int, int>, std::pair<int, int>>;

inline PlainEdge plain(const Vertex& u, const Vertex& v) {
  std::pair<int, int> a{u.row, u.col};
  std::pair<int, int> b{v.row, v.col};
  if (b < a) std::swap(a, b);
  return {a, b};
}

/// Every edge of C_m wreath K_n, from the definition.
inline std::set<PlainEdge> wreath_edges(int m, int n) {
  std::set<PlainEdge> out;
  for (int i = 0; i < m; ++i) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) out.insert(plain({i, a}, {i, b}));
      for (int b = 0; b < n; ++b) out.insert(plain({i, a}, {(i + 1) % m, b}));
    }
  }
  return out;
}

inline NaiveResult naive_partition(const Decomposition& d, const std::set<PlainEdge>& host) {
  const int m = d.host.m;
  const int n = d.host.n;
  std::set<PlainEdge> seen;
  auto take = [&](const Vertex& u, const Vertex& v) -> std::string {
    if (u.row < 0 || u.row >= m || u.col < 0 || u.col >= n) return "vertex out of range";
    const auto e = plain(u, v);
    if (!host.count(e)) return "edge outside host";
    if (!seen.insert(e).second) return "edge used twice";
    return "";
  };
  for (const auto& f : d.cycle_factors) {
    std::set<std::pair<int, int>> cover;
    for (const auto& c : f.cycles) {
      if (int(c.size()) != f.length) return {false, "wrong cycle length in " + f.label};
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (!cover.insert({c[j].row, c[j].col}).second) return {false, "repeated vertex in " + f.label};
        if (auto why = take(c[j], c[(j + 1) % c.size()]); !why.empty()) return {false, why + " in " + f.label};
      }
    }
    if (int(cover.size()) != m * n) return {false, f.label + " does not span"};
  }
  for (const auto& f : d.one_factors) {
    std::set<std::pair<int, int>> cover;
    for (const auto& e : f.edges) {
      if (!cover.insert({e.a.row, e.a.col}).second || !cover.insert({e.b.row, e.b.col}).second) {
        return {false, "repeated vertex in " + f.label};
      }
      if (auto why = take(e.a, e.b); !why.empty()) return {false, why + " in " + f.label};
    }
    if (int(cover.size()) != m * n) return {false, f.label + " does not span"};
  }
  if (seen.size() != host.size()) return {false, "host edges left uncovered"};
  return {};
}

inline std::set<PlainEdge> plain_edges(const EdgeSet& edges) {
  std::set<PlainEdge> out;
  for (const auto& e : edges) out.insert(plain(e.a, e.b));
  return out;
}

inline int count_length(const Decomposition& d, int len) {
  return int(std::count_if(d.cycle_factors.begin(), d.cycle_factors.end(),
                           [&](const CycleFactor& f) { return f.length == len; }));
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("hwp-test-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace hwp::test
