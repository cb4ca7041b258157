#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hwp/pattern_solver.hpp"
#include "hwp/solution_cache.hpp"
#include "support.hpp"

using namespace hwp;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::trunc);
  out << s;
}

struct CerrCapture {
  std::ostringstream buf;
  std::streambuf* old;
  CerrCapture() : old(std::cerr.rdbuf(buf.rdbuf())) {}
  ~CerrCapture() { std::cerr.rdbuf(old); }
};

const DifferenceMultiset kZeroTwo = DifferenceMultiset::symmetric(16, {2}, true);

}  // namespace

TEST(SolutionCache, StoreThenLookupRoundTrips) {
  test::TempDir dir("cache");
  SolutionCache cache(dir.path());
  const auto d = factorize_layer(9, kZeroTwo, {}, &cache);
  const auto keys = cache.list();
  ASSERT_EQ(keys.size(), 1u);
  EXPECT_EQ(keys[0], SolutionCache::make_key(9, 16, "0,2,14", "row-monotone", 0x5eed));

  LayerStats st;
  const auto again = factorize_layer(9, kZeroTwo, {}, &cache, &st);
  EXPECT_TRUE(st.cache_hit);
  EXPECT_EQ(again, d);
  EXPECT_EQ(recover_pattern(again.cycle_factors, 9, 16), recover_pattern(d.cycle_factors, 9, 16));
}

TEST(SolutionCache, VersionBumpMisses) {
  test::TempDir dir("cache");
  SolutionCache v1(dir.path(), 1);
  factorize_layer(9, kZeroTwo, {}, &v1);
  SolutionCache v2(dir.path(), 2);
  LayerStats st;
  CerrCapture cap;
  factorize_layer(9, kZeroTwo, {}, &v2, &st);
  EXPECT_FALSE(st.cache_hit);
  EXPECT_TRUE(cap.buf.str().empty());
  factorize_layer(9, kZeroTwo, {}, &v2, &st);
  EXPECT_TRUE(st.cache_hit);
}

TEST(SolutionCache, TamperedEntryIsMissWithWarning) {
  test::TempDir dir("cache");
  SolutionCache cache(dir.path());
  factorize_layer(9, kZeroTwo, {}, &cache);
  const auto path = cache.path_for(cache.list().at(0));
  std::string text = slurp(path);
  const auto at = text.find("cycle 0:0 1:");
  ASSERT_NE(at, std::string::npos);
  // Point the first cycle's second vertex at a different column.
  const auto col = text.find(':', at + 10) + 1;
  text[col] = text[col] == '3' ? '5' : '3';
  spit(path, text);

  LayerStats st;
  CerrCapture cap;
  const auto d = factorize_layer(9, kZeroTwo, {}, &cache, &st);
  EXPECT_FALSE(st.cache_hit);
  EXPECT_NE(cap.buf.str().find("hwp: cache: ignoring"), std::string::npos);
  EXPECT_TRUE(verify_decomposition(d));
}

TEST(SolutionCache, GarbageAndForeignEntriesAreIgnored) {
  test::TempDir dir("cache");
  SolutionCache cache(dir.path());
  const auto key = SolutionCache::make_key(9, 16, "0,2,14", "row-monotone", 0x5eed);
  spit(cache.path_for(key), "not a certificate\n");
  {
    CerrCapture cap;
    EXPECT_FALSE(cache.lookup(key, nullptr).has_value());
    EXPECT_NE(cap.buf.str().find("solver-version"), std::string::npos);
  }
  // A valid decomposition stored under the wrong key fails the validator.
  const auto other = factorize_layer(9, DifferenceMultiset::symmetric(16, {6}, true));
  cache.store(key, other);
  CerrCapture cap;
  LayerStats st;
  factorize_layer(9, kZeroTwo, {}, &cache, &st);
  EXPECT_FALSE(st.cache_hit);
  EXPECT_NE(cap.buf.str().find("does not match its key"), std::string::npos);
}

TEST(SolutionCache, ClearRemovesEntries) {
  test::TempDir dir("cache");
  SolutionCache cache(dir.path());
  factorize_layer(9, kZeroTwo, {}, &cache);
  factorize_layer(11, kZeroTwo, {}, &cache);
  EXPECT_EQ(cache.list().size(), 2u);
  EXPECT_EQ(cache.clear(), 2u);
  EXPECT_TRUE(cache.list().empty());
}

TEST(SolutionCache, DefaultDirHonoursEnvironment) {
  const char* old = std::getenv("HWP_CACHE_DIR");
  const std::string saved = old ? old : "";
  setenv("HWP_CACHE_DIR", "/tmp/hwp-env-test", 1);
  EXPECT_EQ(SolutionCache::default_dir(), std::filesystem::path("/tmp/hwp-env-test"));
  if (old) {
    setenv("HWP_CACHE_DIR", saved.c_str(), 1);
  } else {
    unsetenv("HWP_CACHE_DIR");
  }
}
